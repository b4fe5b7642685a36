#include "cache.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tfh::cli {

namespace {

std::string expect_field(std::istream& is, const std::string& key) {
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls(line);
    std::string k;
    std::string v;
    if (!(ls >> k >> v) || k != key) throw std::runtime_error("series cache: expected '" + key + "', got '" + line + "'");
    return v;
  }
  throw std::runtime_error("series cache: missing '" + key + "'");
}

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw std::runtime_error("series cache: bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

void write_cache(std::ostream& os, const SeriesTable& table) {
  os << "# tfhankel series cache\n";
  os << "format " << kCacheFormatVersion << '\n';
  os << "equation " << to_string(table.kind) << '\n';
  os << "order " << table.order() << '\n';
  for (int j = 0; j <= table.order(); ++j) {
    os << j;
    for (const auto& c : table.coeffs[static_cast<std::size_t>(j)].coeffs()) {
      os << ' ' << c.get_num().get_str() << '/' << c.get_den().get_str();
    }
    os << '\n';
  }
}

SeriesTable read_cache(std::istream& is) {
  const std::string version = expect_field(is, "format");
  if (version != std::to_string(kCacheFormatVersion)) {
    throw std::runtime_error("series cache: format version " + version + " is not supported");
  }
  const std::string equation = expect_field(is, "equation");
  const auto kind = parse_equation(equation);
  if (!kind) throw std::runtime_error("series cache: unknown equation '" + equation + "'");
  int order = -1;
  try {
    order = std::stoi(expect_field(is, "order"));
  } catch (const std::logic_error&) {
    throw std::runtime_error("series cache: bad order");
  }
  if (order < 0) throw std::runtime_error("series cache: bad order");

  SeriesTable table{*kind, {}};
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls(line);
    int j = -1;
    if (!(ls >> j) || j != table.order() + 1) throw std::runtime_error("series cache: out-of-sequence record '" + line + "'");
    std::vector<BigRational> coeffs;
    std::string token;
    while (ls >> token) coeffs.push_back(parse_rational(token));
    if (!coeffs.empty() && coeffs.back() == 0) {
      throw std::runtime_error("series cache: trailing zero coefficient in record " + std::to_string(j));
    }
    table.coeffs.emplace_back(std::move(coeffs));
  }
  if (table.order() != order) {
    throw std::runtime_error("series cache: header says order " + std::to_string(order) + ", found " +
                             std::to_string(table.order()));
  }
  return table;
}

std::string cache_file_name(EquationKind kind, int order) {
  return std::string(to_string(kind)) + "_order" + std::to_string(order) + "_v" + std::to_string(kCacheFormatVersion) +
         ".tfseries";
}

std::optional<SeriesTable> load_cached(const std::filesystem::path& dir, EquationKind kind, int order) {
  const auto path = dir / cache_file_name(kind, order);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  SeriesTable table = read_cache(in);
  if (table.kind != kind || table.order() != order) {
    throw std::runtime_error("series cache: " + path.string() + " does not hold the expected table");
  }
  return table;
}

void store_cached(const std::filesystem::path& dir, const SeriesTable& table) {
  std::filesystem::create_directories(dir);
  const auto path = dir / cache_file_name(table.kind, table.order());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write series cache " + tmp.string());
    write_cache(out, table);
    if (!out.flush()) throw std::runtime_error("cannot write series cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace tfh::cli
