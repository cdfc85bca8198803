#pragma once

#include <string>

#include <json.hpp>

#include "hclif/besselexp.hpp"
#include "hclif/betapoly.hpp"
#include "hclif/ck.hpp"
#include "hclif/clifford.hpp"
#include "hclif/polyfun.hpp"
#include "hclif/vekua.hpp"

namespace hclif {

// All serializers use key-order-preserving JSON so identical values always
// print byte-identically. Rationals cross as "p/q" strings in lowest terms
// ("p" when the denominator is 1). Parsers throw std::invalid_argument on
// malformed input.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const CliffordElement& x);
CliffordElement clifford_from_json(const Json& j);

Json to_json(const PolyFunction& g);
PolyFunction polyfunction_from_json(const Json& j);

Json to_json(const CKTable& t);
CKTable cktable_from_json(const Json& j);

Json to_json(const CKDoubleTable& t);
CKDoubleTable ckdoubletable_from_json(const Json& j);

Json to_json(const BetaPoly& p);
BetaPoly betapoly_from_json(const Json& j, int n);

Json to_json(const NuSeries& s);
NuSeries nuseries_from_json(const Json& j, int n);

Json to_json(const AxialSolution& sol);
AxialSolution axialsolution_from_json(const Json& j);

Json to_json(const ExpSolution& sol);
ExpSolution expsolution_from_json(const Json& j);

std::string dump_json(const Json& j);

}  // namespace hclif
