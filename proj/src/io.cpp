#include "monhecke/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "monhecke/errors.hpp"

namespace monhecke {

namespace {

using nlohmann::json;

struct NamedDatum {
  const char* name;
  std::vector<std::vector<std::int64_t>> gcm;
};

const std::vector<NamedDatum>& registry() {
  static const std::vector<NamedDatum> data{
      {"A1", {{2}}},
      {"A2", {{2, -1}, {-1, 2}}},
      {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
      {"B2", {{2, -1}, {-2, 2}}},
      {"G2", {{2, -1}, {-3, 2}}},
      {"A1~", {{2, -2}, {-2, 2}}},
      {"paper-example-3.11",
       {{2, -2, -2, -2}, {-2, 2, -2, -2}, {-2, -2, 2, -2}, {-2, -2, -3, 2}}},
      {"rank4-indefinite",
       {{2, -2, -2, -2}, {-2, 2, -2, -2}, {-2, -2, 2, -2}, {-2, -2, -3, 2}}},
  };
  return data;
}

ZVec to_zvec(const json& arr) {
  require(arr.is_array(), Err::ParseError, "expected an array of integers");
  ZVec out;
  for (const auto& x : arr) {
    require(x.is_number_integer(), Err::ParseError, "expected an integer entry");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

}  // namespace

std::vector<std::string> named_data() {
  std::vector<std::string> out;
  for (const auto& d : registry()) out.emplace_back(d.name);
  return out;
}

bool is_named_datum(const std::string& name) {
  for (const auto& d : registry())
    if (name == d.name) return true;
  return false;
}

std::shared_ptr<RootDatum> make_named_datum(const std::string& name) {
  for (const auto& d : registry())
    if (name == d.name)
      return std::make_shared<RootDatum>(GCM(d.gcm), LatticeSpec::sc());
  fail(Err::ParseError, "unknown named root datum: " + name);
}

std::shared_ptr<RootDatum> load_datum_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), Err::ParseError, "cannot open datum file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(Err::ParseError, std::string("datum file is not valid JSON: ") + e.what());
  }
  require(doc.is_object() && doc.contains("gcm"), Err::ParseError,
          "datum file needs a \"gcm\" field");
  std::vector<std::vector<std::int64_t>> gcm;
  require(doc["gcm"].is_array(), Err::ParseError, "\"gcm\" must be an array of arrays");
  for (const auto& row : doc["gcm"]) {
    ZVec r = to_zvec(row);
    gcm.emplace_back(r.begin(), r.end());
  }
  LatticeSpec lattice = LatticeSpec::sc();
  if (doc.contains("lattice")) {
    const json& lat = doc["lattice"];
    if (lat.is_string()) {
      std::string kind = lat.get<std::string>();
      if (kind == "sc") {
        lattice = LatticeSpec::sc();
      } else if (kind == "ad") {
        lattice = LatticeSpec::ad();
      } else {
        fail(Err::ParseError, "lattice must be \"sc\", \"ad\" or an object: " + kind);
      }
    } else {
      require(lat.is_object() && lat.contains("roots") && lat.contains("coroots"),
              Err::ParseError, "explicit lattice needs \"roots\" and \"coroots\"");
      lattice.kind = LatticeKind::Explicit;
      for (const auto& v : lat["roots"]) lattice.roots.push_back(to_zvec(v));
      for (const auto& v : lat["coroots"]) lattice.coroots.push_back(to_zvec(v));
    }
  }
  return std::make_shared<RootDatum>(GCM(std::move(gcm)), lattice);
}

std::shared_ptr<RootDatum> resolve_datum(const std::string& name_or_path) {
  if (is_named_datum(name_or_path)) return make_named_datum(name_or_path);
  return load_datum_file(name_or_path);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, sep)) out.push_back(tok);
  return out;
}

std::int64_t parse_i64(const std::string& s) {
  try {
    size_t pos = 0;
    std::int64_t v = std::stoll(s, &pos);
    require(pos == s.size(), Err::ParseError, "trailing junk in integer: " + s);
    return v;
  } catch (const MhError&) {
    throw;
  } catch (...) {
    fail(Err::ParseError, "expected an integer, got: " + s);
  }
}

}  // namespace

MultLocalSystem parse_char_spec(const RootDatum& datum, const std::string& spec) {
  auto colon = spec.find(':');
  require(colon != std::string::npos, Err::ParseError,
          "character spec must look like \"Z/2:1,0\"");
  std::string target_str = spec.substr(0, colon);
  std::string values_str = spec.substr(colon + 1);

  AbGroup target;
  for (const std::string& factor : split(target_str, 'x')) {
    if (factor.rfind("Z/", 0) == 0) {
      std::int64_t m = parse_i64(factor.substr(2));
      require(m >= 2, Err::ParseError, "torsion factor must be Z/m with m >= 2");
      require(target.free_rank == 0, Err::ParseError,
              "torsion factors must come before free factors");
      target.torsion.push_back(m);
    } else if (factor.rfind("Z^", 0) == 0) {
      std::int64_t f = parse_i64(factor.substr(2));
      require(f >= 0, Err::ParseError, "free rank must be >= 0");
      target.free_rank += static_cast<int>(f);
    } else if (factor == "Z") {
      target.free_rank += 1;
    } else {
      fail(Err::ParseError, "bad group factor: " + factor);
    }
  }
  require(target.slots() > 0, Err::ParseError, "target group must have at least one factor");

  int r = datum.lattice_rank();
  std::vector<ZVec> values;
  std::vector<std::string> tuples = split(values_str, ';');
  if (static_cast<int>(tuples.size()) == r) {
    for (const auto& t : tuples) {
      ZVec v;
      for (const auto& c : split(t, ',')) v.push_back(parse_i64(c));
      require(static_cast<int>(v.size()) == target.slots(), Err::ParseError,
              "value tuple has wrong number of slots: " + t);
      values.push_back(std::move(v));
    }
  } else if (tuples.size() == 1 && target.slots() == 1) {
    for (const auto& c : split(values_str, ','))
      values.push_back(ZVec{parse_i64(c)});
    require(static_cast<int>(values.size()) == r, Err::ParseError,
            "need one value per basis cocharacter (" + std::to_string(r) + ")");
  } else {
    fail(Err::ParseError, "need " + std::to_string(r) + " value tuples");
  }
  return MultLocalSystem(&datum, std::move(target), std::move(values));
}

std::vector<int> parse_word_spec(const std::string& spec, int rank) {
  if (spec.empty() || spec == "e") return {};
  std::vector<int> out;
  for (const auto& tok : split(spec, ',')) {
    std::int64_t v = parse_i64(tok);
    require(v >= 1 && v <= rank, Err::ParseError,
            "word letter out of range [1," + std::to_string(rank) + "]: " + tok);
    out.push_back(static_cast<int>(v - 1));
  }
  return out;
}

std::string word_spec(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ",";
    os << word[i] + 1;
  }
  return os.str();
}

}  // namespace monhecke
