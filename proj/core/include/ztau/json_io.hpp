#pragma once

#include <nlohmann/json.hpp>

#include <vector>

#include "ztau/bohr.hpp"
#include "ztau/series.hpp"

namespace ztau::json {

using nlohmann::json;

/// Dense integer array, e.g. [2,-1,1]; trailing zeros optional on read.
json to_json(const MultiIndex& n);
MultiIndex multiindex_from_json(const json& j);

/// {"terms":[{"index":[...],"re":x,"im":y},...]}, terms ascending in the
/// tau order. Readers canonicalize indices, merge repeats and drop exact
/// zeros.
json to_json(const FourierSeries& f);
FourierSeries series_from_json(const json& j);

/// {"terms":[{"num":N,"den":D,"re":x,"im":y},...]}. Integers beyond 64 bits
/// are written as decimal strings; readers accept either form.
json to_json(const DirichletSeries& d);
DirichletSeries dirichlet_from_json(const json& j);

/// A list of multi-indices: [[1],[0,1],...].
std::vector<MultiIndex> support_from_json(const json& j);

/// Terms of f sorted ascending by the tau order.
std::vector<std::pair<MultiIndex, Complex>> tau_sorted_terms(const FourierSeries& f);

}  // namespace ztau::json
