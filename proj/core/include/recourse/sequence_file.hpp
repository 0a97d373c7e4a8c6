#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recourse/types.hpp"

namespace recourse {

enum class SequenceKind { orientation, bmatching };

/// Canonical line-oriented instance file.
///
///     orientation c=2            bmatching K=1 C=2
///     3 7                        0 10 11
///     7 9                        1 11
///
/// Ids are unsigned decimals without leading zeros, fields are separated by
/// single spaces and every line ends with '\n'. Only canonical text is
/// accepted, so parse followed by serialize reproduces the input exactly.
struct SequenceFile {
  SequenceKind kind = SequenceKind::orientation;
  /// Header parameters in file order (orientation needs c; bmatching K and C).
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::vector<Edge> edges;                    // orientation
  std::vector<std::vector<NodeId>> arrivals;  // bmatching, arrival i on line i

  std::int64_t param(std::string_view key, std::int64_t fallback) const;
  bool has_param(std::string_view key) const;
  void set_param(std::string_view key, std::int64_t value);
  std::size_t size() const { return kind == SequenceKind::orientation ? edges.size() : arrivals.size(); }

  friend bool operator==(const SequenceFile&, const SequenceFile&) = default;
};

std::string_view to_string(SequenceKind kind);

SequenceFile parse_sequence(std::string_view text);
std::string serialize_sequence(const SequenceFile& file);

SequenceFile make_orientation_sequence(std::vector<Edge> edges, std::uint32_t c = 2);
SequenceFile make_bmatching_sequence(std::vector<std::vector<NodeId>> arrivals, std::uint32_t K,
                                     std::uint32_t C);

/// Witness file: "witness orientation" (head per edge) or "witness bmatching"
/// (right node per arrival), then one id per line.
struct WitnessFile {
  SequenceKind kind = SequenceKind::orientation;
  std::vector<NodeId> ids;

  friend bool operator==(const WitnessFile&, const WitnessFile&) = default;
};

WitnessFile parse_witness(std::string_view text);
std::string serialize_witness(const WitnessFile& file);

}  // namespace recourse
