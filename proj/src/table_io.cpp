#include "randdag/table_io.hpp"

#include <fstream>
#include <sstream>

#include "randdag/errors.hpp"

namespace randdag {

namespace {

std::string header_line(const std::string& kind, const std::string& policy,
                        int max_n, int max_m) {
  std::ostringstream os;
  os << "randdag-table v1 kind=" << kind << " policy=" << policy
     << " maxN=" << max_n << " maxM=" << max_m;
  return os.str();
}

std::string expect_field(std::istringstream& is, const std::string& key) {
  std::string token;
  if (!(is >> token) || token.rfind(key + "=", 0) != 0)
    throw CacheError("cache header: missing field " + key);
  return token.substr(key.size() + 1);
}

int parse_int_field(const std::string& s, const std::string& key) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw CacheError("cache header: bad integer for " + key);
  }
}

}  // namespace

CacheHeader read_cache_header(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CacheError("cache: empty file");
  std::istringstream is(line);
  std::string magic, version;
  if (!(is >> magic >> version) || magic != "randdag-table" || version != "v1")
    throw CacheError("cache: not a randdag-table v1 file");
  CacheHeader h;
  h.kind = expect_field(is, "kind");
  h.policy = expect_field(is, "policy");
  h.max_n = parse_int_field(expect_field(is, "maxN"), "maxN");
  h.max_m = parse_int_field(expect_field(is, "maxM"), "maxM");
  return h;
}

void write_doag_table_cache(std::ostream& out, const DoagCountTable& table) {
  out << header_line("doag", table.policy().spec_string(), table.max_n(),
                     table.max_m())
      << '\n';
  table.for_each_entry([&](int n, int m, int k, const BigCount& c) {
    out << n << ' ' << m << ' ' << k << ' ' << c.to_decimal() << '\n';
  });
}

DoagCountTable read_doag_table_cache(std::istream& in) {
  CacheHeader h = read_cache_header(in);
  if (h.kind != "doag") throw CacheError("cache: expected kind=doag");
  DegreePolicy policy = DegreePolicy::parse(h.policy);
  std::vector<std::tuple<int, int, int, BigCount>> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    int n, m, k;
    std::string digits;
    if (!(is >> n >> m >> k >> digits))
      throw CacheError("cache: malformed entry line");
    std::string extra;
    if (is >> extra) throw CacheError("cache: trailing data on entry line");
    try {
      entries.emplace_back(n, m, k, BigCount::from_decimal(digits));
    } catch (const MalformedInputError&) {
      throw CacheError("cache: bad count value");
    }
  }
  return DoagCountTable::from_entries(h.max_n, h.max_m, policy, entries);
}

void write_source_table_cache(std::ostream& out,
                              const SourceCountTable& table) {
  out << header_line("source", "all", table.max_n(), 0) << '\n';
  table.for_each_entry([&](int n, int k, const BigCount& c) {
    out << n << ' ' << k << ' ' << c.to_decimal() << '\n';
  });
}

SourceCountTable read_source_table_cache(std::istream& in) {
  CacheHeader h = read_cache_header(in);
  if (h.kind != "source") throw CacheError("cache: expected kind=source");
  std::vector<std::tuple<int, int, BigCount>> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    int n, k;
    std::string digits;
    if (!(is >> n >> k >> digits))
      throw CacheError("cache: malformed entry line");
    try {
      entries.emplace_back(n, k, BigCount::from_decimal(digits));
    } catch (const MalformedInputError&) {
      throw CacheError("cache: bad count value");
    }
  }
  return SourceCountTable::from_entries(h.max_n, entries);
}

void write_gamma_table_cache(std::ostream& out, const GammaTable& table) {
  out << header_line("gamma", "all", std::max(table.a_max(), 0),
                     std::max(table.b_max(), 0))
      << '\n';
  table.for_each_entry([&](int a, int b, const BigCount& c) {
    out << a << ' ' << b << ' ' << c.to_decimal() << '\n';
  });
}

GammaTable read_gamma_table_cache(std::istream& in) {
  CacheHeader h = read_cache_header(in);
  if (h.kind != "gamma") throw CacheError("cache: expected kind=gamma");
  std::vector<std::tuple<int, int, BigCount>> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    int a, b;
    std::string digits;
    if (!(is >> a >> b >> digits))
      throw CacheError("cache: malformed entry line");
    try {
      entries.emplace_back(a, b, BigCount::from_decimal(digits));
    } catch (const MalformedInputError&) {
      throw CacheError("cache: bad count value");
    }
  }
  return GammaTable::from_entries(h.max_n, h.max_m, entries);
}

std::optional<DoagCountTable> try_load_doag_table(const std::string& path,
                                                  const DegreePolicy& policy,
                                                  int max_n, int max_m) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  auto pos = in.tellg();
  CacheHeader h = read_cache_header(in);
  if (h.kind != "doag" || h.policy != policy.spec_string() ||
      h.max_n != max_n || h.max_m != max_m)
    return std::nullopt;
  in.seekg(pos);
  return read_doag_table_cache(in);
}

void store_doag_table(const std::string& path, const DoagCountTable& table) {
  std::ofstream out(path);
  if (!out) throw CacheError("cache: cannot open " + path + " for writing");
  write_doag_table_cache(out, table);
  if (!out) throw CacheError("cache: write failed for " + path);
}

}  // namespace randdag
