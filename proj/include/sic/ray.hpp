#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sic/quad_scalar.hpp"

namespace sic {

/// Scales a nonzero vector so that its first nonzero component is 1.
/// Throws std::invalid_argument("zero ray") for the all-zero vector.
std::vector<QuadScalar> canonicalize(std::span<const QuadScalar> components);

/// A ray of C^d held by its canonical projective representative.
class Ray {
public:
    explicit Ray(std::vector<QuadScalar> components);

    std::size_t dim() const { return components_.size(); }
    const std::vector<QuadScalar>& components() const { return components_; }
    const QuadScalar& operator[](std::size_t k) const { return components_[k]; }

    friend bool operator==(const Ray&, const Ray&) = default;

private:
    std::vector<QuadScalar> components_;
};

/// Identity on an already canonical ray; kept for symmetry with the
/// component-level overload.
inline Ray canonicalize(const Ray& ray) { return ray; }

/// sum_k conj(u_k) * v_k. Throws std::invalid_argument on dimension mismatch.
QuadScalar inner_product(const Ray& u, const Ray& v);

bool is_orthogonal(const Ray& u, const Ray& v);

enum class DedupPolicy { merge, reject };

/// A set of pairwise projectively distinct rays in dimension dim over
/// Q(sqrt(sqrt_base), i).
class RaySet {
public:
    RaySet(std::size_t dim, std::int64_t sqrt_base);

    /// Appends a ray. Returns false if a projective duplicate was merged;
    /// throws std::invalid_argument on a duplicate under DedupPolicy::reject,
    /// a dimension mismatch, or a component over a different sqrt base.
    bool add(Ray ray, DedupPolicy policy = DedupPolicy::merge);

    std::size_t dim() const { return dim_; }
    std::int64_t sqrt_base() const { return sqrt_base_; }
    std::size_t size() const { return rays_.size(); }
    const std::vector<Ray>& rays() const { return rays_; }
    const Ray& operator[](std::size_t i) const { return rays_[i]; }

    /// Rays at the given indices, in the given order.
    RaySet subset(std::span<const std::size_t> indices) const;

    friend bool operator==(const RaySet&, const RaySet&) = default;

private:
    std::size_t dim_;
    std::int64_t sqrt_base_;
    std::vector<Ray> rays_;
};

/// Ray-file syntax or content error with a 1-based location.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

RaySet parse_rayset(std::string_view text, DedupPolicy policy = DedupPolicy::merge);
RaySet load_rayset(const std::string& path, DedupPolicy policy = DedupPolicy::merge);

/// Canonical ray-file text; parse_rayset(serialize_rayset(s)) == s.
std::string serialize_rayset(const RaySet& s);

} // namespace sic
