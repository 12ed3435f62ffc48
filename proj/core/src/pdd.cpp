// SPDX-License-Identifier: Apache-2.0
#include "polycert/pdd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polycert {

Eigen::VectorXd normalize_ray(const Eigen::VectorXd& r, const Tolerances& tol) {
    if (r(0) > tol.zero) return r / r(0);
    if (r(0) < -tol.zero) return r / -r(0);
    const double n = r.norm();
    return n > tol.zero ? Eigen::VectorXd(r / n) : r;
}

Pdd homogenize(const HPoly& p, const Tolerances& tol) {
    const HPoly n = p.normalized(tol);
    Pdd out;
    out.constraints.resize(n.rows(), n.dim() + 1);
    out.constraints.col(0) = -n.b;
    out.constraints.rightCols(n.dim()) = n.a;
    // homogenized rows renormalized so incidence tolerances stay scale-free
    for (Eigen::Index i = 0; i < out.constraints.rows(); ++i)
        out.constraints.row(i) /= out.constraints.row(i).norm();
    out.rays.resize(0, n.dim() + 1);
    out.shift = Eigen::VectorXd::Zero(n.dim());
    return out;
}

Pdd make_cone(const HPoly& h, const VPoly& v, const Eigen::VectorXd& center,
              const Tolerances& tol) {
    if (h.dim() != center.size()) throw ShapeError("make_cone: center dimension mismatch");
    HPoly shifted = h;
    shifted.b -= h.a * center;
    Pdd out = homogenize(shifted, tol);
    out.shift = center;
    out.rays.resize(v.count(), h.dim() + 1);
    for (Eigen::Index i = 0; i < v.count(); ++i) {
        out.rays(i, 0) = 1.0;
        out.rays.row(i).tail(h.dim()) = v.vertices.row(i) - center.transpose();
    }
    compute_incidence(out, tol);
    return out;
}

Dehomogenized dehomogenize(const Pdd& p, bool require_bounded, const Tolerances& tol) {
    const Eigen::Index d = p.cone_dim() - 1;
    Dehomogenized out;
    out.h.a = p.constraints.rightCols(d);
    out.h.b = -p.constraints.col(0);
    if (p.shift.size() == d) out.h.b += out.h.a * p.shift;

    std::vector<Eigen::Index> verts, dirs;
    for (Eigen::Index i = 0; i < p.num_rays(); ++i) {
        if (p.rays(i, 0) > tol.zero)
            verts.push_back(i);
        else if (p.rays(i, 0) >= -tol.zero)
            dirs.push_back(i);
        else
            throw Error("dehomogenize: ray with negative first coordinate");
    }
    if (require_bounded && !dirs.empty())
        throw UnboundedPolytope("dehomogenize: " + std::to_string(dirs.size()) +
                                " recession direction(s) present");
    out.v.vertices.resize(static_cast<Eigen::Index>(verts.size()), d);
    for (size_t k = 0; k < verts.size(); ++k) {
        const Eigen::Index i = verts[k];
        out.v.vertices.row(static_cast<Eigen::Index>(k)) =
            p.rays.row(i).tail(d) / p.rays(i, 0);
        if (p.shift.size() == d)
            out.v.vertices.row(static_cast<Eigen::Index>(k)) += p.shift.transpose();
    }
    out.recession.resize(static_cast<Eigen::Index>(dirs.size()), d);
    for (size_t k = 0; k < dirs.size(); ++k)
        out.recession.row(static_cast<Eigen::Index>(k)) = p.rays.row(dirs[k]).tail(d);
    return out;
}

Pdd dual_swap(const Pdd& p) {
    Pdd out;
    out.constraints = p.rays;
    out.rays = p.constraints;
    out.shift = p.shift;
    out.incidence.assign(static_cast<size_t>(out.rays.rows()),
                         IncidenceRow(static_cast<size_t>(out.constraints.rows())));
    for (Eigen::Index i = 0; i < p.num_rays(); ++i)
        for (Eigen::Index j = 0; j < p.num_constraints(); ++j)
            if (p.incident(i, j)) out.incidence[static_cast<size_t>(j)].set(static_cast<size_t>(i));
    return out;
}

Pdd dualize(const Pdd& p, const Tolerances& tol) {
    for (Eigen::Index j = 0; j < p.num_constraints(); ++j) {
        if (p.constraints(j, 0) < -tol.feas)
            throw OriginNotInterior("dualize: constraint " + std::to_string(j) +
                                    " has offset " + std::to_string(-p.constraints(j, 0)));
    }
    return dual_swap(p);
}

void compute_incidence(Pdd& p, const Tolerances& tol) {
    const Eigen::Index n = p.num_rays();
    const Eigen::Index m = p.num_constraints();
    p.incidence.assign(static_cast<size_t>(n), IncidenceRow(static_cast<size_t>(m)));
    if (n == 0 || m == 0) return;
    Eigen::MatrixXd prod = p.rays * p.constraints.transpose();  // n x m
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            if (std::abs(prod(i, j)) <= tol.incidence)
                p.incidence[static_cast<size_t>(i)].set(static_cast<size_t>(j));
}

Pdd enforce_a_irredundancy(const Pdd& p) {
    const Eigen::Index n = p.num_rays();
    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        return p.incidence[static_cast<size_t>(i)].count() >
               p.incidence[static_cast<size_t>(j)].count();
    });
    std::vector<Eigen::Index> kept;
    kept.reserve(static_cast<size_t>(n));
    for (Eigen::Index cand : order) {
        const auto& row = p.incidence[static_cast<size_t>(cand)];
        bool dominated = false;
        for (Eigen::Index k : kept) {
            if (row.is_subset_of(p.incidence[static_cast<size_t>(k)])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(cand);
    }
    std::sort(kept.begin(), kept.end());  // keep original ray order
    Pdd out;
    out.constraints = p.constraints;
    out.shift = p.shift;
    out.rays.resize(static_cast<Eigen::Index>(kept.size()), p.rays.cols());
    out.incidence.reserve(kept.size());
    for (size_t k = 0; k < kept.size(); ++k) {
        out.rays.row(static_cast<Eigen::Index>(k)) = p.rays.row(kept[k]);
        out.incidence.push_back(p.incidence[static_cast<size_t>(kept[k])]);
    }
    return out;
}

bool pdd_sound(const Pdd& p, const Tolerances& tol) {
    if (p.num_rays() == 0 || p.num_constraints() == 0) return true;
    Eigen::MatrixXd prod = p.rays * p.constraints.transpose();
    return (prod.array() >= -tol.feas).all();
}

}  // namespace polycert
