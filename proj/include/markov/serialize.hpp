#pragma once

#include <vector>

#include <json.hpp>

#include "markov/fenceposet.hpp"
#include "markov/gmtree.hpp"
#include "markov/lattice.hpp"
#include "markov/matrix2.hpp"
#include "markov/signseq.hpp"

namespace markov {

using Json = nlohmann::ordered_json;

/// [{param_num, param_den, eps_num, eps_den, kind, side | sign}, ...]
Json to_json(const std::vector<CrossingEvent>& events);
/// {"leading": "-", "runs": [...]}
Json to_json(const RunLengthSequence& seq);
/// {"rows": [["a","b"],["c","d"]]} with decimal-string entries.
Json to_json(const Mat2& m);
/// [[m, label], [m, label], [m, label]] with m a decimal string.
Json to_json(const LabeledTriple& v);
/// {"size": n, "up": [...]}
Json to_json(const FencePoset& poset);

Mat2 mat2_from_json(const Json& j);
RunLengthSequence sequence_from_json(const Json& j);

}  // namespace markov
