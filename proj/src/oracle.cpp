#include "bumpless/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "bumpless/maximal.hpp"
#include "bumpless/snow.hpp"

namespace bumpless {

namespace {

class Enumerator {
 public:
  explicit Enumerator(const Permutation& w)
      : w_(w), n_(w.size()), grid_(n_), crossed_(static_cast<std::size_t>(n_) + 1, 0) {}

  std::vector<TileGrid> run() {
    std::vector<int> from_south(static_cast<std::size_t>(n_) + 1);
    for (int c = 1; c <= n_; ++c) from_south[c] = c;
    fill(n_, 1, 0, from_south);
    return std::move(skeletons_);
  }

 private:
  void fill(int r, int c, int west, std::vector<int>& from_south) {
    if (c > n_) {
      if (west != w_(r)) return;
      if (r == 1) {
        skeletons_.push_back(grid_);
        return;
      }
      fill(r - 1, 1, 0, from_south);
      return;
    }
    const int south = from_south[c];
    auto place = [&](Tile t, int north, int east) {
      if (r == 1 && north != 0) return;
      if (c == n_ && east == 0) return;
      grid_.set({r, c}, t);
      from_south[c] = north;
      fill(r, c + 1, east, from_south);
      from_south[c] = south;
    };
    if (south == 0 && west == 0) {
      place(Tile::blank, 0, 0);
    } else if (west == 0) {
      place(Tile::vertical, south, 0);
      place(Tile::se_elbow, 0, south);
    } else if (south == 0) {
      place(Tile::horizontal, 0, west);
      place(Tile::nw_elbow, west, 0);
    } else {
      const std::uint32_t bit = 1u << south;
      if (crossed_[west] & bit) {
        place(Tile::cross, west, south);
      } else {
        crossed_[west] |= bit;
        crossed_[south] |= 1u << west;
        place(Tile::cross, south, west);
        crossed_[west] &= ~bit;
        crossed_[south] &= ~(1u << west);
      }
    }
  }

  const Permutation& w_;
  int n_;
  TileGrid grid_;
  std::vector<std::uint32_t> crossed_;
  std::vector<TileGrid> skeletons_;
};

// Every way of marking a subset of the J tiles of `skeleton`.
void expand_marks(const TileGrid& skeleton, std::vector<TileGrid>& out) {
  const auto elbows = skeleton.cells_with(Tile::nw_elbow);
  const std::vector<Cell> cells(elbows.begin(), elbows.end());
  for (std::uint32_t subset = 0; subset < (1u << cells.size()); ++subset) {
    TileGrid g = skeleton;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (subset & (1u << k)) g.set(cells[k], Tile::marked);
    }
    out.push_back(std::move(g));
  }
}

std::string check_text(Check c) {
  switch (c) {
    case Check::pass: return "yes";
    case Check::fail: return "no";
    case Check::skipped: return "-";
  }
  return "?";
}

Check check_of(bool ok) { return ok ? Check::pass : Check::fail; }

}  // namespace

EnumerationReport enumerate_mbpds(const Permutation& w, int bound) {
  if (w.size() > bound) {
    throw Error(Errc::bound_exceeded, "enumeration limited to n <= " + std::to_string(bound) +
                                          ", got n = " + std::to_string(w.size()));
  }
  std::vector<TileGrid> grids;
  for (const TileGrid& skeleton : Enumerator(w).run()) expand_marks(skeleton, grids);
  std::sort(grids.begin(), grids.end(),
            [](const TileGrid& a, const TileGrid& b) { return a.key() < b.key(); });

  EnumerationReport report{w, {}, {}, 0};
  for (TileGrid& g : grids) {
    Mbpd m = Mbpd::from_grid(std::move(g));
    if (m.perm() != w) {
      throw InvariantViolation("enumeration-reading", "diagram reads " + m.perm().to_string());
    }
    report.max_weight = std::max(report.max_weight, m.weight());
    report.diagrams.push_back(std::move(m));
  }
  for (const Mbpd& m : report.diagrams) {
    if (m.weight() == report.max_weight) report.maximal.push_back(m);
  }
  return report;
}

std::pair<Polynomial, Polynomial> grothendieck_polys(const EnumerationReport& report) {
  const int n = report.w.size();
  const int length = report.w.inversion_length();
  Polynomial single(n);
  Polynomial dbl(n);
  for (const Mbpd& m : report.diagrams) {
    const Integer sign = (m.weight() - length) % 2 == 0 ? 1 : -1;
    Polynomial s = Polynomial::constant(n, sign);
    Polynomial d = Polynomial::constant(n, sign);
    for (int r = 1; r <= n; ++r) {
      for (int c = 1; c <= n; ++c) {
        if (!is_weighted(m.grid().at(r, c))) continue;
        s = s * weight_factor(n, r, c, false);
        d = d * weight_factor(n, r, c, true);
      }
    }
    single += s;
    dbl += d;
  }
  return {single, dbl};
}

std::pair<Polynomial, Polynomial> grothendieck_polys(const Permutation& w, int bound) {
  return grothendieck_polys(enumerate_mbpds(w, bound));
}

std::pair<Polynomial, Polynomial> cm_polys(const EnumerationReport& report) {
  const int n = report.w.size();
  Polynomial single(n);
  Polynomial dbl(n);
  for (const Mbpd& m : report.maximal) {
    Monomial x = Monomial::one(n);
    x.xexp = m.rwt();
    Monomial xy = x;
    xy.yexp = m.cwt();
    single += Polynomial::monomial(x);
    dbl += Polynomial::monomial(xy);
  }
  return {single, dbl};
}

std::pair<Polynomial, Polynomial> cm_polys(const Permutation& w, int bound) {
  return cm_polys(enumerate_mbpds(w, bound));
}

std::uint64_t count_marked_tilings(int n) {
  // profile bit c-1: a strand enters the current row from below in column c
  std::map<std::uint32_t, std::uint64_t> profiles{{(1u << n) - 1, 1}};
  for (int r = n; r >= 1; --r) {
    std::map<std::uint32_t, std::uint64_t> next;
    for (const auto& [below, ways] : profiles) {
      // (column, west strand present, profile above so far, multiplicity)
      auto walk = [&](auto&& self, int c, bool west, std::uint32_t above, std::uint64_t mult) -> void {
        if (c > n) {
          if (west) next[above] += mult;
          return;
        }
        const bool south = below & (1u << (c - 1));
        auto go = [&](bool north, bool east, std::uint64_t weight) {
          if (r == 1 && north) return;
          if (c == n && !east) return;
          self(self, c + 1, east, north ? above | (1u << (c - 1)) : above, mult * weight);
        };
        if (!south && !west) {
          go(false, false, 1);
        } else if (!west) {
          go(true, false, 1);
          go(false, true, 1);
        } else if (!south) {
          go(false, true, 1);
          go(true, false, 2);  // J or M
        } else {
          go(true, true, 1);
        }
      };
      walk(walk, 1, false, 0, ways);
    }
    profiles = std::move(next);
  }
  const auto it = profiles.find(0);
  return it == profiles.end() ? 0 : it->second;
}

bool VerificationRecord::passed() const {
  if (!error.empty()) return false;
  for (Check c : {unique_weightpair, dhat_match, leading_ok, topdeg_ok}) {
    if (c == Check::fail) return false;
  }
  return true;
}

VerificationRecord verify_permutation(const Permutation& w, int bound) {
  VerificationRecord rec{w, {}, {}, std::nullopt, std::nullopt, Check::skipped, Check::skipped, Check::skipped, Check::skipped, {}};
  std::tie(rec.rajcode, rec.rajcode_inv) = rajcode_pair(w);
  try {
    const MaximalResult dhat = run_maximal(w);
    if (w.size() > bound) return rec;

    const EnumerationReport report = enumerate_mbpds(w, bound);
    rec.n_mbpd = static_cast<int>(report.diagrams.size());
    rec.n_maximal = static_cast<int>(report.maximal.size());

    const Mbpd* match = nullptr;
    int matches = 0;
    for (const Mbpd& m : report.maximal) {
      if (m.rwt() == rec.rajcode && m.cwt() == rec.rajcode_inv) {
        match = &m;
        ++matches;
      }
    }
    rec.unique_weightpair = check_of(matches == 1);
    rec.dhat_match = check_of(match != nullptr && match->grid() == dhat.diagram.grid());

    const Polynomial cm = cm_polys(report).second;
    const auto [lead, coeff] = leading_monomial(cm);
    rec.leading_ok = check_of(lead.xexp == rec.rajcode && lead.yexp == rec.rajcode_inv && coeff == 1);

    const Polynomial groth = grothendieck_polys(report).second;
    rec.topdeg_ok = check_of(top_degree_component(groth).abs() == cm);
  } catch (const Error& e) {
    rec.error = e.what();
  }
  return rec;
}

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(),
                                        [](const VerificationRecord& r) { return !r.passed(); }));
}

const VerificationRecord* VerificationReport::first_failure() const {
  for (const VerificationRecord& r : records) {
    if (!r.passed()) return &r;
  }
  return nullptr;
}

VerificationReport verify_permutations(std::vector<Permutation> perms, int jobs, int bound) {
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  std::vector<std::optional<VerificationRecord>> slots(perms.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < perms.size(); k = next++) {
      slots[k] = verify_permutation(perms[k], bound);
    }
  };
  const int threads = std::clamp(jobs, 1, std::max(1, static_cast<int>(perms.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  VerificationReport report;
  for (auto& slot : slots) report.records.push_back(std::move(*slot));
  return report;
}

VerificationReport verify_symmetric_group(int n, int jobs, int bound) {
  return verify_permutations(all_permutations(n), jobs, bound);
}

std::string to_tsv(const VerificationReport& report) {
  std::string out =
      "w\trajcode\trajcode_inv\tn_mbpd\tn_maximal\tunique_weightpair\tdhat_match\tleading_ok\t"
      "topdeg_ok\tstatus\n";
  auto count = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  for (const VerificationRecord& r : report.records) {
    out += r.w.to_string() + '\t' + to_string(r.rajcode) + '\t' + to_string(r.rajcode_inv) + '\t' +
           count(r.n_mbpd) + '\t' + count(r.n_maximal) + '\t' + check_text(r.unique_weightpair) +
           '\t' + check_text(r.dhat_match) + '\t' + check_text(r.leading_ok) + '\t' +
           check_text(r.topdeg_ok) + '\t' + (r.passed() ? "pass" : "fail") + '\n';
  }
  return out;
}

}  // namespace bumpless
