#include "recourse/sequence_file.hpp"

#include <algorithm>
#include <charconv>
#include <type_traits>

#include "recourse/errors.hpp"

namespace recourse {
namespace {

[[noreturn]] void bad(std::size_t line, const std::string& why) {
  throw Error(ErrorKind::rejected_input, "line " + std::to_string(line) + ": " + why);
}

/// Splits canonical text into lines; the final line must end with '\n'.
std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  if (text.empty()) bad(1, "empty file");
  if (text.back() != '\n') bad(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1,
                              "missing final newline");
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> fields_of(std::string_view line, std::size_t lineno) {
  std::vector<std::string_view> out;
  if (line.empty()) bad(lineno, "empty line");
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(' ', start);
    const std::string_view f = line.substr(start, end == std::string_view::npos ? end : end - start);
    if (f.empty()) bad(lineno, "fields must be separated by single spaces");
    out.push_back(f);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

template <class Int>
Int number(std::string_view s, std::size_t lineno) {
  Int value{};
  if (s.size() > 1 && s.front() == '0') bad(lineno, "leading zero in '" + std::string(s) + "'");
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if constexpr (std::is_unsigned_v<Int>) bad(lineno, "expected an unsigned number");
    if (s.front() == '+' || s == "-0") bad(lineno, "non-canonical sign");
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) bad(lineno, "bad number '" + std::string(s) + "'");
  return value;
}

SequenceKind kind_of(std::string_view word, std::size_t lineno) {
  if (word == "orientation") return SequenceKind::orientation;
  if (word == "bmatching") return SequenceKind::bmatching;
  bad(lineno, "unknown sequence kind '" + std::string(word) + "'");
}

}  // namespace

std::string_view to_string(SequenceKind kind) {
  return kind == SequenceKind::orientation ? "orientation" : "bmatching";
}

std::int64_t SequenceFile::param(std::string_view key, std::int64_t fallback) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return fallback;
}

bool SequenceFile::has_param(std::string_view key) const {
  return std::any_of(params.begin(), params.end(), [&](const auto& p) { return p.first == key; });
}

void SequenceFile::set_param(std::string_view key, std::int64_t value) {
  for (auto& [k, v] : params) {
    if (k == key) {
      v = value;
      return;
    }
  }
  params.emplace_back(std::string(key), value);
}

SequenceFile parse_sequence(std::string_view text) {
  const auto lines = lines_of(text);
  SequenceFile file;
  const auto head = fields_of(lines[0], 1);
  file.kind = kind_of(head[0], 1);
  for (std::size_t i = 1; i < head.size(); ++i) {
    const std::size_t eq = head[i].find('=');
    if (eq == std::string_view::npos || eq == 0) bad(1, "header parameter must be key=value");
    const std::string key(head[i].substr(0, eq));
    if (file.has_param(key)) bad(1, "duplicate parameter '" + key + "'");
    file.params.emplace_back(key, number<std::int64_t>(head[i].substr(eq + 1), 1));
  }
  if (file.kind == SequenceKind::orientation && !file.has_param("c")) bad(1, "orientation header needs c=");
  if (file.kind == SequenceKind::bmatching && (!file.has_param("K") || !file.has_param("C"))) {
    bad(1, "bmatching header needs K= and C=");
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto f = fields_of(lines[i], lineno);
    if (file.kind == SequenceKind::orientation) {
      if (f.size() != 2) bad(lineno, "expected 'u v'");
      file.edges.push_back(Edge{number<NodeId>(f[0], lineno), number<NodeId>(f[1], lineno)});
    } else {
      if (f.size() < 2) bad(lineno, "expected an arrival index and at least one neighbour");
      if (number<std::size_t>(f[0], lineno) != file.arrivals.size()) bad(lineno, "arrival index out of order");
      std::vector<NodeId> nbrs;
      for (std::size_t j = 1; j < f.size(); ++j) nbrs.push_back(number<NodeId>(f[j], lineno));
      file.arrivals.push_back(std::move(nbrs));
    }
  }
  return file;
}

std::string serialize_sequence(const SequenceFile& file) {
  std::string out(to_string(file.kind));
  for (const auto& [k, v] : file.params) out += " " + k + "=" + std::to_string(v);
  out += '\n';
  if (file.kind == SequenceKind::orientation) {
    for (const Edge& e : file.edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  } else {
    for (std::size_t i = 0; i < file.arrivals.size(); ++i) {
      if (file.arrivals[i].empty()) throw Error(ErrorKind::rejected_input, "arrival with empty neighbour set");
      out += std::to_string(i);
      for (NodeId id : file.arrivals[i]) out += " " + std::to_string(id);
      out += '\n';
    }
  }
  return out;
}

SequenceFile make_orientation_sequence(std::vector<Edge> edges, std::uint32_t c) {
  SequenceFile file;
  file.kind = SequenceKind::orientation;
  file.params = {{"c", c}};
  file.edges = std::move(edges);
  return file;
}

SequenceFile make_bmatching_sequence(std::vector<std::vector<NodeId>> arrivals, std::uint32_t K,
                                     std::uint32_t C) {
  SequenceFile file;
  file.kind = SequenceKind::bmatching;
  file.params = {{"K", K}, {"C", C}};
  file.arrivals = std::move(arrivals);
  return file;
}

WitnessFile parse_witness(std::string_view text) {
  const auto lines = lines_of(text);
  const auto head = fields_of(lines[0], 1);
  if (head.size() != 2 || head[0] != "witness") bad(1, "expected 'witness <kind>'");
  WitnessFile file;
  file.kind = kind_of(head[1], 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i], i + 1);
    if (f.size() != 1) bad(i + 1, "expected a single id");
    file.ids.push_back(number<NodeId>(f[0], i + 1));
  }
  return file;
}

std::string serialize_witness(const WitnessFile& file) {
  std::string out = "witness " + std::string(to_string(file.kind)) + "\n";
  for (NodeId id : file.ids) out += std::to_string(id) + "\n";
  return out;
}

}  // namespace recourse
