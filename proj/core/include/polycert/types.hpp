// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace polycert {

/// Tolerances used throughout the geometry core. Constraint rows are
/// normalized to unit Euclidean norm on ingestion, so these are scale-free.
struct Tolerances {
    double zero = 1e-10;       ///< below this a coefficient counts as zero
    double incidence = 1e-8;   ///< |a.r| band for "constraint active at ray"
    double feas = 1e-8;        ///< permitted constraint violation
};

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundedPolytope : Error {
    explicit UnboundedPolytope(const std::string& what) : Error(what) {}
};

struct OriginNotInterior : Error {
    explicit OriginNotInterior(const std::string& what) : Error(what) {}
};

struct DegenerateRay : Error {
    explicit DegenerateRay(const std::string& what) : Error(what) {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& what) : Error(what) {}
};

struct StableNeuron : Error {
    explicit StableNeuron(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(what) {}
};

struct UnsupportedLayer : Error {
    explicit UnsupportedLayer(const std::string& what) : Error(what) {}
};

struct BackendUnavailable : Error {
    explicit BackendUnavailable(const std::string& what) : Error(what) {}
};

}  // namespace polycert
