#pragma once

#include <stdexcept>
#include <string>

namespace berge {

using Vertex = int;
using EdgeId = int;

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeError : public Error {
 public:
  DegreeError(Vertex vertex, int degree)
      : Error("vertex " + std::to_string(vertex) + " has degree " +
              std::to_string(degree) + ", expected 3"),
        vertex(vertex),
        degree(degree) {}
  Vertex vertex;
  int degree;
};

class NotTwoRegular : public Error {
 public:
  explicit NotTwoRegular(Vertex vertex)
      : Error("vertex " + std::to_string(vertex) +
              " does not have exactly two incident edges in the set"),
        vertex(vertex) {}
  Vertex vertex;
};

class Disconnected : public Error {
 public:
  Disconnected() : Error("graph is not connected") {}
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line(line),
        reason(reason) {}
  int line;
  std::string reason;
};

class NoMatching : public Error {
 public:
  explicit NoMatching(const std::string& what) : Error(what) {}
};

class OddComponent : public Error {
 public:
  explicit OddComponent(const std::string& what) : Error(what) {}
};

class EvenCircuit : public Error {
 public:
  EvenCircuit() : Error("circuit has even length") {}
};

class VertexNotOnCircuit : public Error {
 public:
  explicit VertexNotOnCircuit(Vertex v)
      : Error("vertex " + std::to_string(v) + " is not on the circuit"),
        vertex(v) {}
  Vertex vertex;
};

class NotCubicAux : public Error {
 public:
  NotCubicAux(Vertex vertex, const std::string& context)
      : Error("auxiliary graph is not cubic at vertex " +
              std::to_string(vertex) + "\n" + context),
        vertex(vertex) {}
  Vertex vertex;
};

class NotSurrogate : public Error {
 public:
  explicit NotSurrogate(EdgeId e)
      : Error("edge " + std::to_string(e) + " is not a surrogate edge"),
        edge(e) {}
  EdgeId edge;
};

// A documented hypothesis of a construction does not hold for the input.
class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& clause)
      : Error("precondition violated: " + clause), clause(clause) {}
  std::string clause;
};

// An intermediate claim of a construction failed. Never expected; the
// detail carries the offending instance so it can be replayed.
class AssumptionViolated : public Error {
 public:
  explicit AssumptionViolated(const std::string& detail)
      : Error("assumption violated: " + detail), detail(detail) {}
  std::string detail;
};

class NoHamiltonianCircuit : public Error {
 public:
  explicit NoHamiltonianCircuit(Vertex v)
      : Error("graph minus vertex " + std::to_string(v) +
              " has no hamiltonian circuit"),
        vertex(v) {}
  Vertex vertex;
};

class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error(what) {}
};

class NoPerfectMatching : public Error {
 public:
  NoPerfectMatching() : Error("graph has no perfect matching") {}
};

class BadParams : public Error {
 public:
  explicit BadParams(const std::string& what) : Error(what) {}
};

}  // namespace berge
