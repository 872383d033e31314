#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kms/algebra.hpp"
#include "kms/padic.hpp"
#include "kms/root_datum.hpp"
#include "kms/spherical.hpp"
#include "kms/weyl.hpp"

namespace kms::io {

/// Insertion-ordered so that emitted documents have a fixed key order.
using Json = nlohmann::ordered_json;

/// {"cartan": [[...]], "labels": [...]} or a bare matrix; `text` is inline JSON
/// or a path to a file holding it.
RootDatum datum_from_json(const Json& j);
RootDatum load_datum(const std::string& text);

/// "1,2,3" -> {1, 2, 3}
std::vector<std::int64_t> parse_int_list(const std::string& s);
/// Rank 1 accepts "2,4,6"; higher rank separates coweights by ';' ("2,2;4,4").
std::vector<BaseCoweight> parse_chain(const std::string& s, std::size_t rank);
/// Exact rational q, or nullopt for "formal".
std::optional<Rational> parse_q(const std::string& s);
BaseCoweight parse_coweight(const std::string& s, std::size_t rank);

Json to_json(const BigInt& x);
Json to_json(const Rational& x);
Json to_json(const LatticeVec& x);
/// {"min_power": k, "coeff": [c_k, c_{k+1}, ...]}
Json to_json(const VPoly& p);
Json to_json(const Classification& c);
Json to_json(const RootTable& t);
Json to_json(const WeylElement& w);
Json to_json(const AlgebraElement& e);
/// Coefficients as v-polynomials when q is unset, exact rationals otherwise.
Json to_json(const TruncatedSeries& s, const std::optional<Rational>& q);
Json to_json(const StabilizationReport& r);
Json to_json(const padic::CosetCensus& c);
Json to_json(const padic::IwahoriCensus& c);

}  // namespace kms::io
