#include "fracdim/path_csv.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "fracdim/error.hpp"

namespace fracdim::sim {

std::string format_g17(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_path_csv(std::ostream& os, const SamplePath& path) {
  const std::size_t d = path.dim();
  os << 't';
  for (std::size_t c = 1; c <= d; ++c) os << ",b_" << c;
  for (std::size_t c = 1; c <= d; ++c) os << ",f_" << c;
  os << '\n';
  const auto times = path.grid().times();
  for (std::size_t i = 0; i < times.size(); ++i) {
    os << format_g17(times[i]);
    for (double v : path.bm(i)) os << ',' << format_g17(v);
    for (double v : path.drift(i)) os << ',' << format_g17(v);
    os << '\n';
  }
}

namespace {
std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first != last && *first == ' ') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw Error("bad-csv", "line " + std::to_string(line_no) + ": not a number '" + s + "'");
  }
  return v;
}
}  // namespace

SamplePath read_path_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error("bad-csv", "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line);
  if (header.size() < 3 || header.size() % 2 == 0 || header[0] != "t") {
    throw Error("bad-csv", "header must be t,b_1..b_d,f_1..f_d");
  }
  const std::size_t d = (header.size() - 1) / 2;
  for (std::size_t c = 1; c <= d; ++c) {
    if (header[c] != "b_" + std::to_string(c) || header[d + c] != "f_" + std::to_string(c)) {
      throw Error("bad-csv", "unexpected header column");
    }
  }
  std::vector<double> times, bm, drift;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != header.size()) {
      throw Error("bad-csv", "line " + std::to_string(line_no) + ": wrong field count");
    }
    times.push_back(parse_double(fields[0], line_no));
    for (std::size_t c = 0; c < d; ++c) bm.push_back(parse_double(fields[1 + c], line_no));
    for (std::size_t c = 0; c < d; ++c) drift.push_back(parse_double(fields[1 + d + c], line_no));
  }
  if (times.empty()) throw Error("bad-csv", "no data rows");
  std::optional<TimeGrid> grid;
  try {
    grid.emplace(TimeGrid::custom(std::move(times)));
  } catch (const Error& e) {
    throw Error("bad-csv", e.what());
  }
  return SamplePath(std::move(*grid), d, std::move(bm), std::move(drift), 0,
                    IncrementsMethod{}, "from-csv");
}

}  // namespace fracdim::sim
