#ifndef BASEFREE_ERROR_HPP
#define BASEFREE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace basefree {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched variable lists, coefficient fields, or malformed arguments.
struct structural_error : error {
    using error::error;
};

// Operand outside the operation's domain (zero polynomial, both operands
// constant in the elimination variable, ...).
struct degenerate_input_error : error {
    using error::error;
};

struct range_error : error {
    using error::error;
};

// tangent_cone requested at a point not on the curve.
struct not_on_curve_error : error {
    using error::error;
};

// The two curves share a component through the point; the intersection
// multiplicity is infinite and is never reported as a number.
struct common_component_error : error {
    using error::error;
};

struct invalid_input_error : error {
    using error::error;
};

// Random specializations kept disagreeing past the retry bound.
struct genericity_failure_error : error {
    using error::error;
};

// A base point would need an extension of degree beyond the configured limit,
// or a field tower.
struct size_limit_error : error {
    using error::error;
};

struct not_birational_error : error {
    not_birational_error(const std::string& msg, long fiber_degree)
        : error(msg), fiber_degree(fiber_degree) {}
    long fiber_degree;
};

struct parse_error : error {
    using error::error;
};

}  // namespace basefree

#endif
