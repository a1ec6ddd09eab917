#ifndef AJF_JSON_IO_HPP
#define AJF_JSON_IO_HPP

#include <json.hpp>

#include "ajf/automorphisms.hpp"
#include "ajf/johnson.hpp"
#include "ajf/lielyndon.hpp"
#include "ajf/ranks.hpp"
#include "ajf/tensorseries.hpp"

// JSON forms. Big integers are always decimal strings.
namespace ajf::json_io {

using nlohmann::json;

// [{"word": [1,1,2], "coeff": "3"}, ...]
json to_json(const LieElement& e);
LieElement lie_element_from_json(int alphabet, int degree, const json& j);

// {"degree": s, "values": {"x1": [...], ...}}
json to_json(const Derivation& d);
Derivation derivation_from_json(int rank, const json& j);

// [{"monomial": [1,2], "coeff": "-1"}, ...] in graded lexicographic order.
json to_json(const Series& s);

// {"rows": r, "cols": c, "rank": k, "expected": k'}
json to_json(const InjectivityReport& r);

// {"n": n, "k": k, "s": s, "ranks": ["1", "2", "1"]}
json to_json(const RankTable& t);

}  // namespace ajf::json_io

#endif
