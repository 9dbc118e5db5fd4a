#include "modsub/enumerator.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modsub {

bool SearchFilter::accepts(const CosetPair& pair) const {
  if (cusp_split && cusp_split->sum() != pair.mu()) return false;
  const Signature sig = signature(pair);
  if (torsion_free && (sig.e2 != 0 || sig.e3 != 0)) return false;
  if (genus && sig.g != *genus) return false;
  if (cusp_split && !(modsub::cusp_split(pair) == *cusp_split)) return false;
  return true;
}

namespace {

constexpr std::int32_t kUnset = -1;

// Canonical-construction search state.
//
// Points are labeled in the order a breadth-first relabeling from point 0
// would discover them: for each labeled point x in label order we fix phi(x),
// then psi(x) and psi^2(x), and any image not yet labeled receives the next
// fresh label. A completed state is therefore its own canonical form at base
// 0, and each rooted class is produced exactly once.
class Search {
public:
  Search(std::size_t mu, const SearchFilter& filter)
      : mu_(static_cast<point_t>(mu)),
        phi_(mu, kUnset),
        psi_(mu, kUnset),
        psi_inv_(mu, kUnset),
        filter_(&filter),
        allow_fixed_(!filter.torsion_free) {
    // 6h = 12 + mu - 3 e2 - 4 e3 - 12 g bounds the number of cusps from above.
    const std::int64_t g = filter.genus.value_or(0);
    h_max_ = (12 + static_cast<std::int64_t>(mu) - 12 * g) / 6;
    if (filter.torsion_free && filter.genus) h_exact_ = h_max_;
    if (filter.cusp_split) {
      width_budget_.assign(mu + 1, 0);
      for (std::uint32_t w : filter.cusp_split->widths()) {
        if (w <= mu) ++width_budget_[w];
      }
      h_max_ = std::min<std::int64_t>(h_max_, static_cast<std::int64_t>(filter.cusp_split->size()));
    }
    labeled_ = 1;
  }

  // Stops at `split_depth` and records the frontier into `tasks`; classes
  // completed above that depth go straight to `emit`.
  template <class Emit>
  void collect(std::uint32_t split_depth, std::vector<Search>& tasks, Emit& emit) {
    split_depth_ = split_depth;
    tasks_ = &tasks;
    step(emit);
    tasks_ = nullptr;
  }

  template <class Emit>
  void run(Emit& emit) {
    tasks_ = nullptr;
    step(emit);
  }

private:
  struct Undo {
    std::int64_t closed_count;
    std::int64_t closed_total;
    point_t labeled;
    std::uint32_t widths[3];
    int width_count = 0;
  };

  std::int32_t product(point_t s) const {
    const std::int32_t t = psi_[s];
    return t < 0 ? kUnset : phi_[t];
  }

  Undo save() const { return Undo{closed_count_, closed_total_, labeled_, {0, 0, 0}, 0}; }

  void restore(const Undo& u) {
    closed_count_ = u.closed_count;
    closed_total_ = u.closed_total;
    labeled_ = u.labeled;
    for (int i = 0; i < u.width_count; ++i) ++width_budget_[u.widths[i]];
  }

  // Accounts for cycles of phi*psi closed by the edges leaving `sources`.
  bool close_cycles(std::initializer_list<std::int32_t> sources, Undo& undo) {
    point_t seen_min[3];
    int seen = 0;
    for (std::int32_t s : sources) {
      if (s < 0 || product(static_cast<point_t>(s)) < 0) continue;
      const point_t start = static_cast<point_t>(s);
      point_t lowest = start;
      std::uint32_t len = 1;
      std::int32_t t = product(start);
      bool closed = true;
      while (static_cast<point_t>(t) != start) {
        lowest = std::min(lowest, static_cast<point_t>(t));
        ++len;
        t = product(static_cast<point_t>(t));
        if (t < 0) {
          closed = false;
          break;
        }
      }
      if (!closed) continue;
      if (std::find(seen_min, seen_min + seen, lowest) != seen_min + seen) continue;
      seen_min[seen++] = lowest;

      ++closed_count_;
      closed_total_ += len;
      if (!width_budget_.empty()) {
        if (width_budget_[len] == 0) return false;
        --width_budget_[len];
        undo.widths[undo.width_count++] = len;
      }
    }
    if (closed_count_ > h_max_) return false;
    if (h_exact_ && closed_count_ + (static_cast<std::int64_t>(mu_) - closed_total_) < *h_exact_) return false;
    return true;
  }

  template <class Emit>
  void step(Emit& emit) {
    if (tasks_ && depth_ == split_depth_) {
      Search task = *this;
      task.tasks_ = nullptr;
      tasks_->push_back(std::move(task));
      return;
    }
    if (cursor_ == labeled_) {
      if (labeled_ == mu_) finish(emit);
      return;
    }
    const point_t x = cursor_;
    if (stage_ == 0) {
      if (phi_[x] >= 0) {
        stage_ = 1;
        step(emit);
        stage_ = 0;
        return;
      }
      if (allow_fixed_) try_phi(x, x, emit);
      for (point_t y = x + 1; y < labeled_; ++y) {
        if (phi_[y] < 0) try_phi(x, y, emit);
      }
      if (labeled_ < mu_) try_phi(x, labeled_, emit);
      return;
    }

    if (psi_[x] >= 0) {
      ++cursor_;
      stage_ = 0;
      step(emit);
      --cursor_;
      stage_ = 1;
      return;
    }
    if (allow_fixed_) try_psi(x, x, x, emit);
    const point_t known = labeled_;
    for (point_t a = x + 1; a <= known && a < mu_; ++a) {
      if (a < known && psi_[a] >= 0) continue;
      // a == known is the fresh label.
      const point_t after_a = std::max(known, a + 1);
      for (point_t b = x + 1; b <= after_a && b < mu_; ++b) {
        if (b == a) continue;
        if (b < known && psi_[b] >= 0) continue;
        try_psi(x, a, b, emit);
      }
    }
  }

  template <class Emit>
  void try_phi(point_t x, point_t y, Emit& emit) {
    Undo undo = save();
    phi_[x] = static_cast<std::int32_t>(y);
    phi_[y] = static_cast<std::int32_t>(x);
    labeled_ = std::max(labeled_, y + 1);
    ++depth_;
    if (close_cycles({psi_inv_[x], x == y ? kUnset : psi_inv_[y]}, undo)) {
      stage_ = 1;
      step(emit);
      stage_ = 0;
    }
    --depth_;
    phi_[x] = kUnset;
    phi_[y] = kUnset;
    restore(undo);
  }

  template <class Emit>
  void try_psi(point_t x, point_t a, point_t b, Emit& emit) {
    Undo undo = save();
    bool ok;
    if (a == x) {
      psi_[x] = psi_inv_[x] = static_cast<std::int32_t>(x);
      ok = close_cycles({static_cast<std::int32_t>(x)}, undo);
    } else {
      psi_[x] = static_cast<std::int32_t>(a);
      psi_[a] = static_cast<std::int32_t>(b);
      psi_[b] = static_cast<std::int32_t>(x);
      psi_inv_[a] = static_cast<std::int32_t>(x);
      psi_inv_[b] = static_cast<std::int32_t>(a);
      psi_inv_[x] = static_cast<std::int32_t>(b);
      labeled_ = std::max({labeled_, a + 1, b + 1});
      ok = close_cycles({static_cast<std::int32_t>(x), static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)},
                        undo);
    }
    ++depth_;
    if (ok) {
      ++cursor_;
      stage_ = 0;
      step(emit);
      stage_ = 1;
      --cursor_;
    }
    --depth_;
    for (point_t p : {x, a, b}) psi_[p] = psi_inv_[p] = kUnset;
    restore(undo);
  }

  template <class Emit>
  void finish(Emit& emit) {
    std::vector<point_t> phi(mu_);
    std::vector<point_t> psi(mu_);
    for (point_t i = 0; i < mu_; ++i) {
      phi[i] = static_cast<point_t>(phi_[i]);
      psi[i] = static_cast<point_t>(psi_[i]);
    }
    CosetPair pair = CosetPair::validate(Permutation(std::move(phi)), Permutation(std::move(psi)));
    if (!filter_->accepts(pair)) return;
    CanonicalKey key = encode_labeling(pair);
    emit(RootedClass{std::move(pair), std::move(key)});
  }

  point_t mu_;
  std::vector<std::int32_t> phi_;
  std::vector<std::int32_t> psi_;
  std::vector<std::int32_t> psi_inv_;
  const SearchFilter* filter_;
  bool allow_fixed_;

  point_t labeled_ = 0;
  point_t cursor_ = 0;
  int stage_ = 0;
  std::uint32_t depth_ = 0;

  std::int64_t closed_count_ = 0;
  std::int64_t closed_total_ = 0;
  std::int64_t h_max_ = 0;
  std::optional<std::int64_t> h_exact_;
  std::vector<std::uint32_t> width_budget_;

  std::uint32_t split_depth_ = 0;
  std::vector<Search>* tasks_ = nullptr;
};

bool trivially_empty(std::size_t mu, const SearchFilter& filter) {
  if (mu == 0) throw std::invalid_argument("index must be at least 1");
  if (filter.cusp_split && filter.cusp_split->sum() != mu) {
    throw std::invalid_argument("cusp split " + filter.cusp_split->to_string() + " does not sum to index " +
                                std::to_string(mu));
  }
  // phi and psi fixed-point-free force 2 | mu and 3 | mu.
  return filter.torsion_free && mu % 6 != 0;
}

void sort_by_key(std::vector<RootedClass>& out) {
  std::sort(out.begin(), out.end(), [](const RootedClass& a, const RootedClass& b) { return a.key < b.key; });
}

int resolve_jobs(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

// Runs `work(i)` for i in [0, n) on the requested number of workers and
// rethrows the first exception raised by any of them.
template <class Work>
void parallel_tasks(std::size_t n, int jobs, Work&& work) {
  std::exception_ptr error;
  std::mutex error_mutex;
  const int workers = resolve_jobs(jobs);
  (void)workers;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    try {
      work(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

void visit_rooted_serial(std::size_t mu, const SearchFilter& filter, const RootedVisitor& visit) {
  if (trivially_empty(mu, filter)) return;
  Search search(mu, filter);
  auto emit = [&](RootedClass&& rc) { visit(rc); };
  search.run(emit);
}

std::vector<RootedClass> enumerate_rooted_serial(std::size_t mu, const SearchFilter& filter) {
  std::vector<RootedClass> out;
  visit_rooted_serial(mu, filter, [&](const RootedClass& rc) { out.push_back(rc); });
  sort_by_key(out);
  return out;
}

std::vector<RootedClass> enumerate_rooted(std::size_t mu, const SearchFilter& filter, const SearchOptions& options) {
  std::vector<RootedClass> out;
  if (trivially_empty(mu, filter)) return out;

  std::vector<Search> tasks;
  auto shallow = [&](RootedClass&& rc) { out.push_back(std::move(rc)); };
  Search(mu, filter).collect(options.split_depth, tasks, shallow);

  std::vector<std::vector<RootedClass>> found(tasks.size());
  parallel_tasks(tasks.size(), options.jobs, [&](std::size_t i) {
    auto emit = [&](RootedClass&& rc) { found[i].push_back(std::move(rc)); };
    tasks[i].run(emit);
  });
  for (auto& part : found) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  sort_by_key(out);
  return out;
}

namespace {

template <class Accept>
std::uint64_t count_if(std::size_t mu, const SearchFilter& filter, const SearchOptions& options, Accept accept) {
  if (trivially_empty(mu, filter)) return 0;
  std::uint64_t total = 0;
  std::vector<Search> tasks;
  auto shallow = [&](RootedClass&& rc) { total += accept(rc) ? 1 : 0; };
  Search(mu, filter).collect(options.split_depth, tasks, shallow);

  std::vector<std::uint64_t> counts(tasks.size(), 0);
  parallel_tasks(tasks.size(), options.jobs, [&](std::size_t i) {
    auto emit = [&](RootedClass&& rc) { counts[i] += accept(rc) ? 1 : 0; };
    tasks[i].run(emit);
  });
  for (std::uint64_t c : counts) total += c;
  return total;
}

}  // namespace

std::uint64_t count_rooted(std::size_t mu, const SearchFilter& filter, const SearchOptions& options) {
  return count_if(mu, filter, options, [](const RootedClass&) { return true; });
}

std::uint64_t count_classes(std::size_t mu, const SearchFilter& filter, const SearchOptions& options) {
  return count_if(mu, filter, options, [](const RootedClass& rc) { return is_minimal_labeling(rc.pair); });
}

namespace {

std::vector<ConjClass> group_classes(std::span<const RootedClass> rooted, std::span<const MinimalKey> keys,
                                     const std::function<void(std::vector<ConjClass>&)>& fill_chirality) {
  std::map<CanonicalKey, std::size_t> index;
  std::vector<ConjClass> classes;
  for (std::size_t i = 0; i < rooted.size(); ++i) {
    auto [it, inserted] = index.try_emplace(keys[i].key, classes.size());
    if (inserted) {
      CosetPair rep = canonical_pair(rooted[i].pair, keys[i].base);
      classes.push_back(ConjClass{std::move(rep), keys[i].key, keys[i].multiplicity, false, 0});
    } else if (classes[it->second].aut_order != keys[i].multiplicity) {
      throw std::logic_error("conjugate pairs disagree on automorphism count");
    }
    ++classes[it->second].members;
  }
  fill_chirality(classes);
  std::sort(classes.begin(), classes.end(),
            [](const ConjClass& a, const ConjClass& b) { return a.canonical_key < b.canonical_key; });
  return classes;
}

}  // namespace

std::vector<ConjClass> conjugacy_reduce_serial(std::span<const RootedClass> rooted) {
  std::vector<MinimalKey> keys;
  keys.reserve(rooted.size());
  for (const auto& rc : rooted) keys.push_back(minimal_key(rc.pair));
  return group_classes(rooted, keys, [](std::vector<ConjClass>& classes) {
    for (auto& c : classes) c.chiral = minimal_key(mirror(c.representative)).key != c.canonical_key;
  });
}

std::vector<ConjClass> conjugacy_reduce(std::span<const RootedClass> rooted, const SearchOptions& options) {
  std::vector<MinimalKey> keys(rooted.size());
  parallel_tasks(rooted.size(), options.jobs, [&](std::size_t i) { keys[i] = minimal_key(rooted[i].pair); });
  return group_classes(rooted, keys, [&](std::vector<ConjClass>& classes) {
    parallel_tasks(classes.size(), options.jobs, [&](std::size_t i) {
      classes[i].chiral = minimal_key(mirror(classes[i].representative)).key != classes[i].canonical_key;
    });
  });
}

std::uint64_t class_size(const ConjClass& c) { return c.representative.mu() / c.aut_order; }

}  // namespace modsub
