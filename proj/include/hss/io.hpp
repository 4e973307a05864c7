#pragma once

#include <string>

#include "hss/action.hpp"
#include "hss/algebra.hpp"
#include "hss/group.hpp"
#include "hss/surface.hpp"

namespace hss {

/// JSON file formats, all with 0-based indices and [re, im] scalar pairs:
///   group:   {"orders": [n1, ...]}
///   algebra: {"dim": d, "unit": [[re,im], ...],
///             "structure": [[i,j,k,re,im], ...]}   (sparse; rest zero)
///   action:  {"images": [[[re,im], ...], ...]}     (one vector per factor)
///   surface: {"triangles": [{"label": [r1, ...]}, ...],
///             "gluings": [[[t,e],[t2,e2]], ...]}   (label omitted = identity)

FiniteAbelianGroup read_group(const std::string& path);
Algebra read_algebra(const std::string& path, double tolerance = 1e-9);
GAction read_action(const std::string& path, const FiniteAbelianGroup& group,
                    const Algebra& algebra);
LabeledSurface read_surface(const std::string& path,
                            const FiniteAbelianGroup& group);

void write_group(const std::string& path, const FiniteAbelianGroup& group);
void write_algebra(const std::string& path, const Algebra& algebra);
void write_action(const std::string& path, const GAction& action);
void write_surface(const std::string& path, const LabeledSurface& surface);

}  // namespace hss
