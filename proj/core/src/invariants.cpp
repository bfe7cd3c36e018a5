#include "ftc/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "ftc/khalimsky.hpp"

namespace ftc {

bool Cover::is_cover() const {
  PointSet all = space->none();
  for (const auto& p : pieces) {
    if (!same_space(p.space(), space)) return false;
    all |= p.members();
  }
  return all == space->all();
}

Cover principalize(const Cover& cover) {
  Cover out{cover.space, {}, {}};
  const PointSet maxima = maximal_elements(*cover.space);
  for (const auto& piece : cover.pieces)
    out.pieces.push_back(open_hull(cover.space, piece.members() & maxima));
  return out;
}

std::optional<Line> find_line(const FiniteSpace& p, const PointSet& members) {
  if (!p.is_product()) throw Error(ErrorCode::invalid_parameter, "lines live in product spaces");
  const auto w = static_cast<Point>(p.left_factor()->size());
  const auto h = static_cast<Point>(p.right_factor()->size());
  for (Point a = 0; a < h; ++a) {
    bool full = true;
    for (Point x = 0; x < w && full; ++x) full = members.contains(p.point_at(x, a));
    if (full) return Line{true, a};
  }
  for (Point a = 0; a < w; ++a) {
    bool full = true;
    for (Point y = 0; y < h && full; ++y) full = members.contains(p.point_at(a, y));
    if (full) return Line{false, a};
  }
  return std::nullopt;
}

HomotopyVerdict is_section_categorical(const DownSet& open, const HomotopyOptions& options) {
  const SpacePtr& p = open.space();
  if (!p->is_product() || !same_space(p->left_factor(), p->right_factor()))
    throw Error(ErrorCode::invalid_parameter, "section-categorical sets live in X x X");
  if (open.empty()) {
    HomotopyVerdict v;
    v.result = Verdict::homotopic;
    v.reason = "empty open set";
    return v;
  }
  const SpacePtr& x = p->left_factor();
  if (auto chart = circle_chart(*x)) {
    if (auto line = find_line(*p, open.members())) {
      // On the line one projection is the identity of the circle and the other is constant.
      CircleMap along{chart->n, chart->n, {}};
      CircleMap across{chart->n, chart->n, {}};
      HomotopyVerdict v;
      for (Point q : chart->point) {
        along.table.push_back(chart->residue[q]);
        across.table.push_back(chart->residue[line->a]);
        v.obstruction.push_back(line->horizontal ? p->point_at(q, line->a) : p->point_at(line->a, q));
      }
      v.result = Verdict::not_homotopic;
      v.reason = std::string("contains the ") + (line->horizontal ? "horizontal" : "vertical") +
                 " line through " + x->label(line->a) + "; the projections have degrees " +
                 std::to_string(degree(along)) + " and " + std::to_string(degree(across)) + " on it";
      return v;
    }
  }
  Subspace sub = subspace(p, open.members(), p->name() + "|U");
  auto [p1, p2] = projections(p);
  return homotopic(restrict_to(p1, sub), restrict_to(p2, sub), options);
}

HomotopyVerdict is_categorical(const DownSet& open, const HomotopyOptions& options) {
  return nullhomotopic_in(open, options);
}

std::string_view to_string(Invariant k) { return k == Invariant::cat ? "cat" : "tc"; }

std::string_view to_string(LevelOutcome o) {
  switch (o) {
    case LevelOutcome::found: return "found";
    case LevelOutcome::exhausted: return "exhausted";
    case LevelOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

long known_tc_lower_bound(const FiniteSpace& x) { return circle_chart(x) ? 1 : 0; }

SpacePtr search_space(const SpacePtr& x, Invariant kind) {
  return kind == Invariant::cat ? x : product(x, x);
}

namespace {

HomotopyVerdict certify_piece(const DownSet& piece, Invariant kind, const HomotopyOptions& opt) {
  return kind == Invariant::cat ? is_categorical(piece, opt) : is_section_categorical(piece, opt);
}

class CoverSearch {
public:
  CoverSearch(const SpacePtr& x, Invariant kind, int colours, const SearchConfig& config)
      : kind_(kind), colours_(colours), config_(config), y_(search_space(x, kind)) {
    maxima_ = maximal_elements(*y_).members();
    if (maxima_.size() > config.max_maximal && !config.force)
      throw Error(ErrorCode::budget_exceeded,
                  std::to_string(maxima_.size()) + " maximal elements exceed the cap of " +
                      std::to_string(config.max_maximal) + " (use force)");
    for (Point m : maxima_) downs_.push_back(y_->down(m));
    if (config.time_limit) deadline_ = std::chrono::steady_clock::now() + *config.time_limit;
  }

  Level run() {
    Level level;
    level.pieces = colours_;
    // Root branches: colourings of a short prefix, enumerated in search order.
    const std::size_t depth = std::min<std::size_t>(maxima_.size(), 4);
    std::vector<std::vector<int>> branches;
    {
      std::vector<int> colour;
      std::vector<PointSet> masks(colours_, PointSet(maxima_.size()));
      prefixes(0, depth, 0, colour, masks, branches);
    }
    std::vector<std::optional<std::vector<int>>> found(branches.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{branches.size()};
    auto worker = [&] {
      for (;;) {
        const std::size_t b = next++;
        if (b >= branches.size()) return;
        if (b > best.load()) continue;
        auto r = descend(branches[b], b, best);
        if (r) {
          found[b] = std::move(r);
          std::size_t cur = best.load();
          while (b < cur && !best.compare_exchange_weak(cur, b)) {
          }
        }
      }
    };
    const unsigned threads = std::max(1u, config_.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    level.nodes = nodes_.load();
    level.pieces_checked = memo_.size();
    for (const auto& [k, v] : memo_) level.pieces_unknown += v == Verdict::unknown;
    for (std::size_t b = 0; b < found.size(); ++b) {
      if (!found[b]) continue;
      level.outcome = LevelOutcome::found;
      level.cover = build_cover(*found[b]);
      return level;
    }
    if (truncated_) {
      level.outcome = LevelOutcome::inconclusive;
      level.note = truncation_reason_;
    } else if (level.pieces_unknown > 0) {
      level.outcome = LevelOutcome::inconclusive;
      level.note = std::to_string(level.pieces_unknown) + " pieces undecided within budget";
    } else {
      level.outcome = LevelOutcome::exhausted;
    }
    return level;
  }

private:
  Verdict piece(const PointSet& mask) {
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(mask);
      if (it != memo_.end()) return it->second;
    }
    PointSet members = y_->none();
    mask.for_each([&](Point i) { members |= downs_[i]; });
    HomotopyOptions opt;
    opt.budget = config_.budget;
    opt.certificate = false;
    const Verdict v = certify_piece(DownSet(y_, std::move(members)), kind_, opt).result;
    std::lock_guard lock(mutex_);
    memo_.emplace(mask, v);
    return v;
  }

  bool out_of_budget() {
    if (nodes_.load() > config_.node_budget) {
      truncate("search node budget exhausted");
      return true;
    }
    if (deadline_ && (nodes_.load() & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) {
      truncate("time limit reached");
      return true;
    }
    return truncated_.load();
  }

  void truncate(const std::string& why) {
    std::lock_guard lock(mutex_);
    if (!truncated_) truncation_reason_ = why;
    truncated_ = true;
  }

  void prefixes(std::size_t i, std::size_t depth, int used, std::vector<int>& colour,
                std::vector<PointSet>& masks, std::vector<std::vector<int>>& out) {
    if (i == depth) {
      out.push_back(colour);
      return;
    }
    for (int c = 0; c < std::min(used + 1, colours_); ++c) {
      masks[c].insert(static_cast<Point>(i));
      if (piece(masks[c]) == Verdict::homotopic) {
        colour.push_back(c);
        prefixes(i + 1, depth, std::max(used, c + 1), colour, masks, out);
        colour.pop_back();
      }
      masks[c].erase(static_cast<Point>(i));
    }
  }

  std::optional<std::vector<int>> descend(const std::vector<int>& prefix, std::size_t branch,
                                          const std::atomic<std::size_t>& best) {
    std::vector<int> colour = prefix;
    std::vector<PointSet> masks(colours_, PointSet(maxima_.size()));
    int used = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      masks[prefix[i]].insert(static_cast<Point>(i));
      used = std::max(used, prefix[i] + 1);
    }
    bool done = false;
    auto rec = [&](auto&& self, std::size_t i, int used_now) -> void {
      if (done || best.load() < branch || out_of_budget()) return;
      ++nodes_;
      if (i == maxima_.size()) {
        done = true;
        return;
      }
      for (int c = 0; c < std::min(used_now + 1, colours_) && !done; ++c) {
        masks[c].insert(static_cast<Point>(i));
        if (piece(masks[c]) == Verdict::homotopic) {
          colour.push_back(c);
          self(self, i + 1, std::max(used_now, c + 1));
          if (!done) colour.pop_back();
        }
        masks[c].erase(static_cast<Point>(i));
      }
    };
    rec(rec, prefix.size(), used);
    if (done) return colour;
    return std::nullopt;
  }

  Cover build_cover(const std::vector<int>& colour) {
    Cover cover{y_, {}, {}};
    std::vector<PointSet> members(colours_, y_->none());
    for (std::size_t i = 0; i < colour.size(); ++i) members[colour[i]] |= downs_[i];
    for (auto& m : members)
      if (!m.empty()) cover.pieces.emplace_back(y_, m);
    HomotopyOptions opt;
    opt.budget = config_.budget;
    for (const auto& p : cover.pieces) cover.certificates.push_back(certify_piece(p, kind_, opt));
    return cover;
  }

  Invariant kind_;
  int colours_;
  SearchConfig config_;
  SpacePtr y_;
  std::vector<Point> maxima_;
  std::vector<PointSet> downs_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::mutex mutex_;
  std::unordered_map<PointSet, Verdict, PointSetHash> memo_;
  std::atomic<std::size_t> nodes_{0};
  std::atomic<bool> truncated_{false};
  std::string truncation_reason_;
};

InvariantResult exact(const SpacePtr& x, Invariant kind, long limit, const SearchConfig& config) {
  InvariantResult r;
  r.kind = kind;
  if (kind == Invariant::tc) {
    r.lower = known_tc_lower_bound(*x);
    if (r.lower > 0) r.lower_reason = "realization is a circle, whose tc is 1";
  }
  for (long c = r.lower + 1; c <= limit + 1; ++c) {
    Level level = find_cover(x, kind, static_cast<int>(c), config);
    const LevelOutcome outcome = level.outcome;
    if (outcome == LevelOutcome::found) {
      r.upper = c - 1;
      r.witness = level.cover;
    } else if (outcome == LevelOutcome::exhausted) {
      r.lower = c;
      r.lower_reason = "no certified cover with " + std::to_string(c) + " pieces";
    }
    r.levels.push_back(std::move(level));
    if (outcome == LevelOutcome::found) break;
  }
  return r;
}

InvariantResult witness(const Cover& cover, Invariant kind, const SearchConfig& config) {
  InvariantResult r;
  r.kind = kind;
  Cover checked = cover;
  const bool ok = certify(checked, kind, config);
  if (kind == Invariant::tc) {
    r.lower = known_tc_lower_bound(*cover.space->left_factor());
    if (r.lower > 0) r.lower_reason = "realization is a circle, whose tc is 1";
  }
  if (ok) r.upper = static_cast<long>(checked.pieces.size()) - 1;
  r.witness = std::move(checked);
  return r;
}

}  // namespace

Level find_cover(const SpacePtr& x, Invariant kind, int pieces, const SearchConfig& config) {
  if (pieces < 1) throw Error(ErrorCode::invalid_parameter, "need at least one piece");
  CoverSearch search(x, kind, pieces, config);
  return search.run();
}

bool certify(Cover& cover, Invariant kind, const SearchConfig& config) {
  if (kind == Invariant::tc &&
      (!cover.space->is_product() || !same_space(cover.space->left_factor(), cover.space->right_factor())))
    throw Error(ErrorCode::invalid_parameter, "tc covers live in X x X");
  if (!cover.is_cover()) throw Error(ErrorCode::invalid_parameter, "pieces do not cover the space");
  HomotopyOptions opt;
  opt.budget = config.budget;
  cover.certificates.clear();
  bool all = true;
  for (const auto& p : cover.pieces) {
    cover.certificates.push_back(certify_piece(p, kind, opt));
    all = all && cover.certificates.back().homotopic();
  }
  return all;
}

InvariantResult cat_exact(const SpacePtr& x, long limit, const SearchConfig& config) {
  return exact(x, Invariant::cat, limit, config);
}

InvariantResult tc_exact(const SpacePtr& x, long limit, const SearchConfig& config) {
  return exact(x, Invariant::tc, limit, config);
}

InvariantResult cat_witness(const Cover& cover, const SearchConfig& config) {
  return witness(cover, Invariant::cat, config);
}

InvariantResult tc_witness(const Cover& cover, const SearchConfig& config) {
  return witness(cover, Invariant::tc, config);
}

}  // namespace ftc
