#ifndef BASEFREE_MAPS_HPP
#define BASEFREE_MAPS_HPP

#include "basefree/curve_local.hpp"

namespace basefree {

namespace detail {

inline long validate_components(const std::vector<PolyQ>& comps, size_t expected) {
    if (comps.size() != expected)
        throw invalid_input_error("expected " + std::to_string(expected) + " components");
    long deg = -1;
    for (auto& c : comps) {
        if (c.is_zero_poly()) throw invalid_input_error("zero component");
        if (!c.is_homogeneous()) throw invalid_input_error("component is not homogeneous");
        if (deg < 0) deg = c.degree();
        if (c.degree() != deg) throw invalid_input_error("components of unequal degree");
    }
    if (!gcd_poly(comps).is_constant())
        throw invalid_input_error("components share a common factor");
    return deg;
}

}  // namespace detail

// A rational surface parametrization: 4 coprime forms of common degree.
class SurfaceParam {
  public:
    explicit SurfaceParam(std::vector<PolyQ> comps)
        : degree_(detail::validate_components(comps, 4)), comps_(std::move(comps)) {}

    const std::vector<PolyQ>& components() const { return comps_; }
    const PolyQ& operator[](size_t i) const { return comps_[i]; }
    long degree() const { return degree_; }

  private:
    long degree_;
    std::vector<PolyQ> comps_;
};

// A planar rational map: 3 coprime forms of common degree.
class PlanarMap {
  public:
    explicit PlanarMap(std::vector<PolyQ> comps)
        : degree_(detail::validate_components(comps, 3)), comps_(std::move(comps)) {}

    const std::vector<PolyQ>& components() const { return comps_; }
    const PolyQ& operator[](size_t i) const { return comps_[i]; }
    long degree() const { return degree_; }

  private:
    long degree_;
    std::vector<PolyQ> comps_;
};

}  // namespace basefree

#endif
