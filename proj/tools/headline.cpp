#include "headline.hpp"

#include <algorithm>
#include <sstream>

#include "ftc/coloring.hpp"
#include "ftc/khalimsky.hpp"
#include "ftc/witness.hpp"

namespace ftc::cli {

namespace {

std::string value_of(const InvariantResult& r) {
  if (r.exact()) return std::to_string(r.lower);
  return "[" + std::to_string(r.lower) + "," + (r.upper ? std::to_string(*r.upper) : "?") + "]";
}

std::string circle(int n) { return "S1_" + std::to_string(n); }

}  // namespace

std::vector<TableRow> headline_table(const SearchConfig& config) {
  std::vector<TableRow> rows;
  const int tc_expected[] = {3, 2, 2};
  for (int n = 2; n <= 3; ++n) {
    auto r = tc_exact(khalimsky_circle(n).space, 3, config);
    rows.push_back({"tc(" + circle(n) + ")", std::to_string(tc_expected[n - 2]), value_of(r), "exact search",
                    r.exact() && r.lower == tc_expected[n - 2]});
  }
  {
    auto arg = two_piece_argument(4, config);
    auto three = find_cover(khalimsky_circle(4).space, Invariant::tc, 3, config);
    const bool lower = arg.impossible();
    const bool upper = three.outcome == LevelOutcome::found;
    std::string value = lower && upper ? "2" : lower ? "[2,?]" : upper ? "[1,2]" : "[1,?]";
    rows.push_back({"tc(" + circle(4) + ")", "2", value,
                    std::to_string(arg.classes.size()) + " simple classes refuted, 3-piece cover", lower && upper});
  }
  for (int k = 5; k <= 7; ++k) {
    auto report = verify_bundle(k);
    auto y = witness_space(k);
    Cover cover{y, {build_U(k), build_V(k)}, {}};
    auto r = tc_witness(cover, config);
    rows.push_back({"tc(" + circle(k) + ")", "1", report.passed() ? value_of(r) : "[1,?]", "witness cover {U,V}",
                    report.passed() && r.exact() && r.lower == 1});
  }
  {
    std::string values;
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
      auto r = cat_exact(khalimsky_circle(n).space, 2, config);
      values += (values.empty() ? "" : ",") + value_of(r);
      ok = ok && r.exact() && r.lower == 1;
    }
    rows.push_back({"cat(S1_n), n=2..6", "1,1,1,1,1", values, "exact search", ok});
  }
  const int cat_expected[] = {3, 2};
  for (int n = 2; n <= 3; ++n) {
    auto c = khalimsky_circle(n).space;
    auto r = cat_exact(product(c, c), 4, config);
    rows.push_back({"cat(" + circle(n) + " x " + circle(n) + ")", std::to_string(cat_expected[n - 2]), value_of(r),
                    "exact search", r.exact() && r.lower == cat_expected[n - 2]});
  }
  {
    auto classes = enumerate_simple_colorings(square_grid(4), 2, Symmetry::full);
    rows.push_back({"simple 2-colorings of 4x4", "2", std::to_string(classes.size()), "enumeration up to symmetry",
                    classes.size() == 2});
  }
  {
    std::string claimed, computed;
    bool same = true;
    for (int k = 5; k <= 7; ++k) {
      auto report = verify_bundle(k);
      claimed += (claimed.empty() ? "" : ",") + std::to_string(report.claimed_n);
      computed += (computed.empty() ? "" : ",") + (report.n_C ? std::to_string(*report.n_C) : "-");
      same = same && report.n_C && *report.n_C == report.claimed_n;
    }
    rows.push_back({"core circle size of U, k=5..7", claimed, computed, "beat point removal", same});
  }
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows) {
  std::size_t w[4] = {8, 8, 8, 6};
  for (const auto& r : rows) {
    w[0] = std::max(w[0], r.quantity.size());
    w[1] = std::max(w[1], r.expected.size());
    w[2] = std::max(w[2], r.computed.size());
    w[3] = std::max(w[3], r.method.size());
  }
  auto pad = [](const std::string& s, std::size_t width) { return s + std::string(width - s.size() + 2, ' '); };
  std::ostringstream out;
  out << pad("quantity", w[0]) << pad("expected", w[1]) << pad("computed", w[2]) << pad("method", w[3]) << "status\n";
  for (const auto& r : rows)
    out << pad(r.quantity, w[0]) << pad(r.expected, w[1]) << pad(r.computed, w[2]) << pad(r.method, w[3])
        << (r.agrees ? "agrees" : "differs") << '\n';
  return out.str();
}

}  // namespace ftc::cli
