// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <boost/dynamic_bitset.hpp>
#include <vector>

#include "polycert/polytope.hpp"
#include "polycert/types.hpp"

namespace polycert {

using IncidenceRow = boost::dynamic_bitset<>;

/// Polyhedral cone in partial double description: an exact constraint matrix
/// paired with an under-approximating generator set, plus the incidence
/// relation between them. Constraint rows are homogenized as [-b | a] and
/// normalized; rays are scaled to first coordinate 1 when it is positive.
/// `shift` records the translation applied to the original polytope so that
/// conversions back can undo it.
struct Pdd {
    Eigen::MatrixXd constraints;         // m x (d+1)
    Eigen::MatrixXd rays;                // n x (d+1)
    std::vector<IncidenceRow> incidence; // n rows of m bits
    Eigen::VectorXd shift;               // d, translation applied to inputs

    Eigen::Index num_constraints() const { return constraints.rows(); }
    Eigen::Index num_rays() const { return rays.rows(); }
    Eigen::Index cone_dim() const { return constraints.cols() > 0 ? constraints.cols() : rays.cols(); }

    bool incident(Eigen::Index ray, Eigen::Index constraint) const {
        return incidence[static_cast<size_t>(ray)].test(static_cast<size_t>(constraint));
    }
};

/// Result of dropping back to polytope coordinates.
struct Dehomogenized {
    HPoly h;
    VPoly v;
    Eigen::MatrixXd recession;  // rows: directions from rays with x0 ~ 0
};

/// Scale a cone ray to a canonical representative: first coordinate 1 when
/// positive, -1 when negative, unit norm otherwise.
Eigen::VectorXd normalize_ray(const Eigen::VectorXd& r, const Tolerances& tol = {});

/// Embed {x | a x >= b} as the cone {x' | [-b|a] x' >= 0}. No rays attached.
Pdd homogenize(const HPoly& p, const Tolerances& tol = {});

/// Cone with both constraints and rays, translated by -center first so the
/// stored polytope is P - center. Incidence is computed.
Pdd make_cone(const HPoly& h, const VPoly& v, const Eigen::VectorXd& center,
              const Tolerances& tol = {});

/// Intersect the cone with the x0 = 1 plane and undo the stored shift.
/// Rays with x0 <= tol become recession directions; if `require_bounded`
/// and any exist, throws UnboundedPolytope.
Dehomogenized dehomogenize(const Pdd& p, bool require_bounded = false,
                           const Tolerances& tol = {});

/// Exchange the roles of constraints and rays (the cone polar under the
/// x.y >= 0 pairing); incidence transposes. Involution.
Pdd dual_swap(const Pdd& p);

/// Polar dual of a polytope-cone whose dehomogenization must contain the
/// origin. Throws OriginNotInterior when a constraint certifies that the
/// origin lies outside (offset b > 0 after the shift).
Pdd dualize(const Pdd& p, const Tolerances& tol = {});

/// Recompute the incidence matrix: entry (i,j) true iff |a_j . r_i| <= tol.
void compute_incidence(Pdd& p, const Tolerances& tol = {});

/// Drop every ray whose active-constraint set is contained in a retained
/// ray's set. Rays are considered in order of decreasing active count;
/// among equal incidence sets the lowest original index survives.
Pdd enforce_a_irredundancy(const Pdd& p);

/// True iff every ray satisfies every constraint to within tol.feas.
bool pdd_sound(const Pdd& p, const Tolerances& tol = {});

}  // namespace polycert
