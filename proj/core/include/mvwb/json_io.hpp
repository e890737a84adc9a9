#pragma once

#include <string>

#include "mvwb/combinatorics.hpp"
#include "mvwb/monomial.hpp"
#include "mvwb/nilpotent.hpp"
#include "mvwb/series.hpp"
#include "mvwb/slice_point.hpp"
#include "mvwb/tableau.hpp"

namespace mvwb {

// JSON encodings shared by all modules:
//   rationals      "p/q"
//   multisets      [{"v": "p/q", "mult": k}, ...]
//   partitions     [parts...]
//   series         {"var": "u"|"t", "lead": d, "coeffs": [...], "order": k}
//   slice points   {"n":..., "lambda": [...], "mu": [...], "a": [[{"r","v"}]]}
//   slice matrices {"pi": [...], "entries": [["p/q", ...], ...]}
//   monomials      {"factors": [{"i":..., "k": "p/q", "e":...}]}
//   assignments    [{"i":..., "c": "p/q", "partition": [...]}]
//   tableaux       {"shape": [...], "rows": [["p/q", ...], ...]}
//   reports        {"check":..., "instances":..., "failures": [...]}
std::string multiset_json(const Multiset& m);
Multiset multiset_from_json(const std::string& s);

std::string partition_json(const Partition& p);
std::string series_json(const SeriesU& s);
std::string combinatorics_json(const SliceCombinatorics& c);
std::string slice_point_json(const SlicePoint& g);
SlicePoint slice_point_from_json(const std::string& s);
std::string slice_matrix_json(const SliceMatrix& X);
std::string monomial_json(const Monomial& p);
std::string assignment_json(const PartitionAssignment& a);
std::string tableau_json(const RowTableau& t);
std::string report_json(const CheckReport& r);

// Pretty-printers for `mvwb convert`.
std::string pretty_from_json(const std::string& payload);

}  // namespace mvwb
