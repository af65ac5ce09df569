#pragma once

#include <json.hpp>

#include "coxdef/algebra.hpp"
#include "coxdef/cellcomplex.hpp"
#include "coxdef/flatness.hpp"
#include "coxdef/fuchsian.hpp"
#include "coxdef/quiver.hpp"

namespace coxdef {

// ordered_json keeps key order stable, which the CLI's byte-reproducibility
// contract relies on
using Json = nlohmann::ordered_json;

// {"rank": r, "orders": [[i, j, m], ...]} with i < j and m an integer >= 2 or
// "inf"; every pair must be listed explicitly.
Json matrix_to_json(const CoxeterMatrix& M);
CoxeterMatrix matrix_from_json(const Json& j);

// {"terms": [{"coeff": "p/q", "exps": [["t", i, j, k, e], ...]}, ...]}
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const CoxeterMatrix& M, const Json& j);

// {"even": bool, "terms": [{"word": [...], "coeff": <poly>}, ...]};
// words must be canonical reduced words (they name spanning-set elements)
Json element_to_json(const SymbolicElement& x);
SymbolicElement element_from_json(const CoxeterMatrix& M, const Json& j);

Json pair_element_to_json(const PairElement& x);

Json assignment_to_json(const RationalAssignment& q);

Json obstruction_to_json(const ObstructionRelation& rel);
Json flatness_to_json(const FlatnessReport& rep);
Json witness_to_json(const WitnessSearchResult& res);

Json signature_to_json(const FuchsianSignature& sig);
FuchsianSignature signature_from_json(const Json& j);

Json complex_to_json(const CoxeterMatrix& M, const CellComplex2& c);
Json orbifold_to_json(const OrbifoldStats& s);

Json quiver_to_json(const Quiver& q);

Json sc_table_to_json(const StructureConstants& table);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

}  // namespace coxdef
