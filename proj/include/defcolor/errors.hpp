#ifndef DEFCOLOR_ERRORS_HPP
#define DEFCOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace defcolor {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(int v)
        : Error("unknown vertex id " + std::to_string(v)), vertex(v) {}
    int vertex;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

class DisconnectedGraph : public Error {
public:
    DisconnectedGraph() : Error("graph is disconnected") {}
};

class NotTriangulated : public Error {
public:
    NotTriangulated() : Error("rotation system is not triangulated") {}
};

/// A face none of whose corner fans can be inserted without creating a loop
/// or a parallel edge.
class UntriangulatableFace : public Error {
public:
    explicit UntriangulatableFace(std::vector<int> walk)
        : Error("untriangulatable face of length " + std::to_string(walk.size())),
          face(std::move(walk)) {}
    std::vector<int> face;
};

class NotFromList : public Error {
public:
    explicit NotFromList(int v)
        : Error("vertex " + std::to_string(v) + " is coloured outside its list"),
          vertex(v) {}
    int vertex;
};

class PartialColouring : public Error {
public:
    explicit PartialColouring(int v)
        : Error("vertex " + std::to_string(v) + " is uncoloured"), vertex(v) {}
    int vertex;
};

class ListExhausted : public Error {
public:
    explicit ListExhausted(int v)
        : Error("list of vertex " + std::to_string(v) + " is fully blocked"),
          vertex(v) {}
    int vertex;
};

class ListTooShort : public Error {
public:
    ListTooShort(int v, int need)
        : Error("list of vertex " + std::to_string(v) + " has fewer than " +
                std::to_string(need) + " colours"),
          vertex(v) {}
    int vertex;
};

class NoFreeColour : public Error {
public:
    explicit NoFreeColour(int v)
        : Error("no free colour for vertex " + std::to_string(v) +
                " (extension precondition violated)"),
          vertex(v) {}
    int vertex;
};

class BranchInvariantViolated : public Error {
public:
    using Error::Error;
};

class ContextInvalid : public Error {
public:
    using Error::Error;
};

class PreconditionTooSmallT : public Error {
public:
    using Error::Error;
};

/// The reducer found no configuration even though the discharging argument
/// guarantees one; carries the audit as evidence of the inconsistency.
class InternalContradiction : public Error {
public:
    explicit InternalContradiction(std::string audit)
        : Error("no reducible configuration found; this contradicts the "
                "discharging guarantee (internal inconsistency)"),
          audit_text(std::move(audit)) {}
    std::string audit_text;
};

class InstanceTooLarge : public Error {
public:
    explicit InstanceTooLarge(unsigned long long n)
        : Error("search exceeded the work budget after " + std::to_string(n) +
                " nodes"),
          nodes(n) {}
    unsigned long long nodes;
};

class ParseError : public Error {
public:
    ParseError(std::string fld, const std::string& message)
        : Error("parse error at '" + fld + "': " + message), field(std::move(fld)) {}
    std::string field;
};

} // namespace defcolor

#endif
