#pragma once

#include "json.hpp"
#include "qcasimir/basis_change.hpp"
#include "qcasimir/casimir.hpp"
#include "qcasimir/verify.hpp"

namespace qcasimir {

using Json = nlohmann::ordered_json;

/// [{"e": quarter exponent, "c": "num/den"}], ascending exponents.
Json to_json(const QLaurent& a);
/// [{"exps": [...], "coeff": QLaurent}], ascending monomials.
Json to_json(const EPoly& p);
/// ["num/den", ...]
Json to_json(const Weight& w);
/// [{"weight": [doubled ints], "coeff": QLaurent}], ascending weights.
Json to_json(const GAElem& x);
Json to_json(const RootSystem& rs);
Json to_json(const CasimirImage& img);
Json to_json(const Constituent& c);
Json to_json(const TriangularSolution& sol);
Json to_json(const GenerationCertificate& cert);
Json to_json(const VerifyReport& report);

/// Inverses of the forms above; throw ParseError on malformed input.
QLaurent qlaurent_from_json(const Json& j);
EPoly epoly_from_json(const Json& j, int num_symbols);
Weight weight_from_json(const Json& j);
GAElem gaelem_from_json(const Json& j, int rank);

}  // namespace qcasimir
