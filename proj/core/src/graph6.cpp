#include "mcnum/graph6.hpp"

#include "mcnum/errors.hpp"

namespace mcnum {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (pos >= text.size()) throw FormatError("missing graph6 length byte", pos);

  const int lead = static_cast<unsigned char>(text[pos]);
  if (lead == 126) throw FormatError("graph6 order n >= 63 is not supported", pos);
  if (lead < kBias || lead > 126) throw FormatError("malformed graph6 length byte", pos);
  const int n = lead - kBias;
  ++pos;

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < need) throw FormatError("truncated graph6 bit vector", text.size());
  if (have > need) throw FormatError("unexpected trailing graph6 data", pos + need);

  GraphBuilder b(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const std::size_t at = pos + k / 6;
      const int group = static_cast<unsigned char>(text[at]) - kBias;
      if (group < 0 || group > 63) throw FormatError("graph6 byte out of range", at);
      if ((group >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  }
  for (std::size_t i = 0; i < need; ++i) {
    const int group = static_cast<unsigned char>(text[pos + i]) - kBias;
    if (group < 0 || group > 63) throw FormatError("graph6 byte out of range", pos + i);
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + need - 1;
    const int group = static_cast<unsigned char>(text[last]) - kBias;
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((group & ((1 << pad) - 1)) != 0) throw FormatError("nonzero graph6 padding bits", last);
  }
  return b.build();
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n >= 63) throw UnsupportedSizeError("graph6 short form requires n < 63");
  std::string out(1, static_cast<char>(kBias + n));
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (group << (6 - filled))));
  return out;
}

}  // namespace mcnum
