#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "monhecke/algebroid.hpp"
#include "monhecke/errors.hpp"
#include "monhecke/io.hpp"
#include "monhecke/klcache.hpp"

using namespace monhecke;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("kl cache: write/read round trip") {
  auto a2 = make_named_datum("A2");
  MultLocalSystem triv = MultLocalSystem::trivial(*a2, AbGroup::cyclic(2));
  EndoscopyCache cache(*a2);
  const CoxeterSystem& cox = cache.coxsys(triv);
  const KLTable& table = cache.kl(triv);

  TempFile tmp("monhecke_klcache_roundtrip.txt");
  write_kl_cache(tmp.path, cox, table);
  auto loaded = read_kl_cache(tmp.path, cox);
  REQUIRE(loaded.has_value());
  CHECK(*loaded == table);
}

TEST_CASE("kl cache: tampered line raises CorruptCache") {
  auto a2 = make_named_datum("A2");
  MultLocalSystem triv = MultLocalSystem::trivial(*a2, AbGroup::cyclic(2));
  EndoscopyCache cache(*a2);
  const CoxeterSystem& cox = cache.coxsys(triv);
  TempFile tmp("monhecke_klcache_tamper.txt");
  write_kl_cache(tmp.path, cox, cache.kl(triv));

  std::ifstream in(tmp.path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  auto pos = content.find('\t');
  REQUIRE(pos != std::string::npos);
  content[pos] = '?';
  std::ofstream out(tmp.path, std::ios::trunc);
  out << content;
  out.close();

  CHECK_THROWS_AS(read_kl_cache(tmp.path, cox), MhError);
}

TEST_CASE("kl cache: stale hash triggers the recompute path") {
  auto a2 = make_named_datum("A2");
  auto b2 = make_named_datum("B2");
  MultLocalSystem ta = MultLocalSystem::trivial(*a2, AbGroup::cyclic(2));
  MultLocalSystem tb = MultLocalSystem::trivial(*b2, AbGroup::cyclic(2));
  EndoscopyCache ca(*a2), cb(*b2);
  const CoxeterSystem& cox_a = ca.coxsys(ta);
  const CoxeterSystem& cox_b = cb.coxsys(tb);

  TempFile tmp("monhecke_klcache_stale.txt");
  write_kl_cache(tmp.path, cox_a, ca.kl(ta));
  // reading against a different Coxeter matrix must not silently reuse
  CHECK_FALSE(read_kl_cache(tmp.path, cox_b).has_value());
  CHECK(read_kl_cache(tmp.path, cox_a).has_value());
}

TEST_CASE("kl cache: missing file means no cache") {
  auto a2 = make_named_datum("A2");
  MultLocalSystem triv = MultLocalSystem::trivial(*a2, AbGroup::cyclic(2));
  EndoscopyCache cache(*a2);
  CHECK_FALSE(read_kl_cache("/tmp/monhecke_definitely_missing_cache.txt", cache.coxsys(triv))
                  .has_value());
}
