#ifndef GPF_ERRORS_HPP
#define GPF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpf {

// Constructor arguments outside the admissible range (e.g. k >= n/2).
struct InvalidParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A walk endpoint that is not a vertex of the triple graph.
struct VertexNotInGraph : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A closed form whose exact division failed; signals an implementation bug,
// never a user error.
struct NonIntegerResult : std::logic_error {
    using std::logic_error::logic_error;
};

// An outer-cycle colouring with unassigned outer edges.
struct IncompleteColouring : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exhaustive search requested above the configured size bound.
struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation that needs the n = 3k structure called on a general GP(n,k).
struct NotApplicable : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gpf

#endif
