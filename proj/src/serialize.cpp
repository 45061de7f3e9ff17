#include "markov/serialize.hpp"

namespace markov {

namespace {

Json rational_parts(const mpq_class& q, const char* num_key, const char* den_key, Json obj) {
  obj[num_key] = q.get_num().get_si();
  obj[den_key] = q.get_den().get_si();
  return obj;
}

}  // namespace

Json to_json(const std::vector<CrossingEvent>& events) {
  Json arr = Json::array();
  for (const CrossingEvent& e : events) {
    Json obj = Json::object();
    obj = rational_parts(e.param.a, "param_num", "param_den", std::move(obj));
    obj = rational_parts(e.param.b, "eps_num", "eps_den", std::move(obj));
    obj["kind"] = to_string(e.kind);
    if (e.side) obj["side"] = *e.side == EdgeSide::NotRight ? "not_right" : "right";
    if (e.triangle_sign) obj["sign"] = *e.triangle_sign == TriangleSign::Minus ? "-" : "+";
    arr.push_back(std::move(obj));
  }
  return arr;
}

Json to_json(const RunLengthSequence& seq) {
  Json obj = Json::object();
  obj["leading"] = std::string(1, to_char(seq.leading));
  obj["runs"] = seq.runs;
  return obj;
}

Json to_json(const Mat2& m) {
  Json obj = Json::object();
  obj["rows"] = Json::array({Json::array({m.e11.get_str(), m.e12.get_str()}),
                             Json::array({m.e21.get_str(), m.e22.get_str()})});
  return obj;
}

Json to_json(const LabeledTriple& v) {
  Json arr = Json::array();
  for (const auto& e : v.entries) arr.push_back(Json::array({e.m.get_str(), e.label}));
  return arr;
}

Json to_json(const FencePoset& poset) {
  Json obj = Json::object();
  obj["size"] = poset.size;
  Json up = Json::array();
  for (bool b : poset.up) up.push_back(b);
  obj["up"] = std::move(up);
  return obj;
}

Mat2 mat2_from_json(const Json& j) {
  try {
    const auto& rows = j.at("rows");
    auto entry = [&](std::size_t r, std::size_t c) {
      return mpz_class(rows.at(r).at(c).get<std::string>());
    };
    return {entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
  } catch (const std::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("bad matrix JSON: ") + ex.what());
  }
}

RunLengthSequence sequence_from_json(const Json& j) {
  try {
    RunLengthSequence seq;
    const auto leading = j.at("leading").get<std::string>();
    if (leading != "-" && leading != "+") throw std::invalid_argument("leading must be - or +");
    seq.leading = leading == "-" ? Sign::Minus : Sign::Plus;
    seq.runs = j.at("runs").get<std::vector<long>>();
    for (long r : seq.runs) {
      if (r < 1) throw std::invalid_argument("runs must be positive");
    }
    return seq;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("bad sequence JSON: ") + ex.what());
  }
}

}  // namespace markov
