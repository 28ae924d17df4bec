#pragma once

#include <string>
#include <vector>

#include "enumerate.hpp"
#include "partition.hpp"
#include "qpoly.hpp"
#include "shi.hpp"
#include "verify.hpp"

namespace simcore {

// External formats.  All output is byte-stable: orderings are the stable
// enumeration orders and JSON keys are emitted in insertion order.

std::string partition_to_json(const Partition& p);           // [5,4,2,1,1]
Partition partition_from_csv(const std::string& comma_list); // "5,4,2,1,1"
std::string partition_to_csv_field(const Partition& p);      // RFC-4180 quoted

// {partition, ell, sl, sl_prime, maj_a?, maj_c?}; maj_a when b = a+1,
// maj_c when additionally a = 2n and the partition is self-conjugate.
std::string stats_record_json(const Partition& p, i64 a, i64 b);

// Family listing; format "json" (array of partitions, or of stat records
// when with_stats) or "csv" (fixed columns: partition, size, length, sl,
// sl_prime, maj_a, maj_c — the last two blank where undefined).
std::string family_listing(const CoreFamily& f, bool with_stats, const std::string& format);

std::string poly_to_json(const IntPoly& p);    // coefficient array
std::string poly2_to_json(const IntPoly2& p);  // [[eq, et, coeff], ...]

// {window, coords: [[root, k], ...], minimal, bounded, core}
std::string alcove_record_json(const AffineWindow& w, const ShiConfig& cfg);
std::string alcove_listing(const ShiConfig& cfg, const std::string& which,
                           const std::string& format);
// {window, coords, descents}
std::string shi_coords_json(const AffineWindow& w, const ShiConfig& cfg);

std::string reports_to_json(const std::vector<Report>& reports);

std::vector<i64> parse_int_list(const std::string& comma_list);

}  // namespace simcore
