#include "monhecke/klcache.hpp"

#include <fstream>
#include <sstream>

#include "monhecke/errors.hpp"

namespace monhecke {

std::string coxeter_matrix_hash(const std::vector<std::vector<int>>& m) {
  // FNV-1a over the entries with separators.
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  feed(m.size());
  for (const auto& row : m) {
    feed(row.size());
    for (int e : row) feed(static_cast<std::uint64_t>(e) + 0x9e3779b9ull);
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ",";
    os << word[i];
  }
  return os.str();
}

std::vector<int> parse_word(const std::string& s) {
  if (s == "e") return {};
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos,
            Err::CorruptCache, "bad word token in cache: " + tok);
    out.push_back(std::stoi(tok));
  }
  require(!out.empty(), Err::CorruptCache, "empty word in cache line");
  return out;
}

std::string poly_str(const LaurentPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << ",";
    first = false;
    os << e << ":" << c.str();
  }
  if (first) os << "0:0";
  return os.str();
}

LaurentPoly parse_poly(const std::string& s) {
  LaurentPoly out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    auto colon = tok.find(':');
    require(colon != std::string::npos, Err::CorruptCache, "bad polynomial token: " + tok);
    try {
      int e = std::stoi(tok.substr(0, colon));
      Int c(tok.substr(colon + 1));
      out += LaurentPoly::monomial(c, e);
    } catch (const MhError&) {
      throw;
    } catch (...) {
      fail(Err::CorruptCache, "bad polynomial token: " + tok);
    }
  }
  return out;
}

}  // namespace

void write_kl_cache(const std::string& path, const CoxeterSystem& cox, const KLTable& table) {
  std::ofstream out(path);
  require(static_cast<bool>(out), Err::CorruptCache, "cannot open cache file for writing: " + path);
  out << "klcache v1 " << coxeter_matrix_hash(table.coxeter_matrix()) << "\n";
  for (int x = 0; x < cox.size(); ++x)
    for (int y = 0; y < cox.size(); ++y) {
      LaurentPoly p = table.entry(x, y, cox);
      if (p.is_zero()) continue;
      out << word_str(cox.canonical_word(x)) << "\t" << word_str(cox.canonical_word(y))
          << "\t" << poly_str(p) << "\n";
    }
  require(static_cast<bool>(out), Err::CorruptCache, "failed writing cache file: " + path);
}

std::optional<KLTable> read_kl_cache(const std::string& path, const CoxeterSystem& cox) {
  std::ifstream in(path);
  if (!in) return std::nullopt;  // no cache yet
  std::string header;
  require(static_cast<bool>(std::getline(in, header)), Err::CorruptCache, "empty cache file");
  std::istringstream hs(header);
  std::string magic, version, hash;
  hs >> magic >> version >> hash;
  require(magic == "klcache" && version == "v1" && !hash.empty(), Err::CorruptCache,
          "bad cache header: " + header);
  if (hash != coxeter_matrix_hash(cox.endo().coxeter_matrix)) return std::nullopt;

  int sz = cox.size();
  std::vector<std::vector<LaurentPoly>> P(static_cast<size_t>(sz),
                                          std::vector<LaurentPoly>(static_cast<size_t>(sz)));
  std::vector<std::vector<bool>> seen(static_cast<size_t>(sz),
                                      std::vector<bool>(static_cast<size_t>(sz), false));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string xs, ys, ps;
    require(static_cast<bool>(std::getline(ls, xs, '\t')) &&
                static_cast<bool>(std::getline(ls, ys, '\t')) &&
                static_cast<bool>(std::getline(ls, ps)),
            Err::CorruptCache, "bad cache line: " + line);
    int x = cox.element_of_word(parse_word(xs));
    int y = cox.element_of_word(parse_word(ys));
    require(!seen[static_cast<size_t>(x)][static_cast<size_t>(y)], Err::CorruptCache,
            "duplicate cache entry");
    seen[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
    P[static_cast<size_t>(x)][static_cast<size_t>(y)] = parse_poly(ps);
  }
  for (int y = 0; y < sz; ++y) {
    require(seen[static_cast<size_t>(y)][static_cast<size_t>(y)] &&
                P[static_cast<size_t>(y)][static_cast<size_t>(y)].is_one(),
            Err::CorruptCache, "cache is missing or corrupts a diagonal entry");
    for (int x = 0; x < sz; ++x)
      if (seen[static_cast<size_t>(x)][static_cast<size_t>(y)] && x != y)
        require(cox.bruhat_leq(x, y) && !P[static_cast<size_t>(x)][static_cast<size_t>(y)].is_zero(),
                Err::CorruptCache, "cache entry violates the Bruhat support");
  }
  return KLTable::from_entries(cox, P);
}

}  // namespace monhecke
