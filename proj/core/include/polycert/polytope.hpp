// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

#include "polycert/types.hpp"

namespace polycert {

/// Halfspace representation {x | a*x >= b}, one constraint per row of `a`.
struct HPoly {
    Eigen::MatrixXd a;  // m x d
    Eigen::VectorXd b;  // m

    HPoly() = default;
    HPoly(Eigen::MatrixXd a_, Eigen::VectorXd b_);

    Eigen::Index rows() const { return a.rows(); }
    Eigen::Index dim() const { return a.cols(); }

    /// Rows scaled to unit Euclidean norm; vacuous 0 >= b rows with b <= tol
    /// dropped. Throws Error on a zero row with b > tol (trivially empty set).
    HPoly normalized(const Tolerances& tol = {}) const;

    /// True iff a*x >= b - eps holds rowwise.
    bool contains(const Eigen::VectorXd& x, double eps) const;

    /// Stack the rows of two systems over the same space.
    static HPoly vstack(const HPoly& p, const HPoly& q);
};

/// Vertex representation: convex hull of the rows of `vertices`.
struct VPoly {
    Eigen::MatrixXd vertices;  // n x d

    VPoly() = default;
    explicit VPoly(Eigen::MatrixXd v);

    Eigen::Index count() const { return vertices.rows(); }
    Eigen::Index dim() const { return vertices.cols(); }
};

/// Parse the polytope text format: one constraint per line,
/// `c1 c2 ... cd >= b`, `#` starts a comment. Values round-trip at 17
/// significant digits.
HPoly read_hpoly(std::istream& in);
HPoly load_hpoly(const std::string& path);
void write_hpoly(std::ostream& out, const HPoly& p);
void save_hpoly(const std::string& path, const HPoly& p);

/// Vertex file: one vertex per line, whitespace-separated, `#` comments.
VPoly read_vpoly(std::istream& in, Eigen::Index dim = -1);
VPoly load_vpoly(const std::string& path);
void write_vpoly(std::ostream& out, const VPoly& v);
void save_vpoly(const std::string& path, const VPoly& v);

/// Exact vertex enumeration by solving all d-subsets of constraint rows.
/// Intended for small dimensions (d <= ~6); cost is C(m,d) * d^3.
/// Vertices are deduplicated and sorted lexicographically.
VPoly enumerate_vertices(const HPoly& p, const Tolerances& tol = {});

/// Componentwise bounding box of a vertex set. Throws EmptyInput if empty.
void bounding_box(const VPoly& v, Eigen::VectorXd& lo, Eigen::VectorXd& hi);

}  // namespace polycert
