// Copyright 2026 The gbsdock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbsdock/sampling.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "gbsdock/errors.h"
#include "gbsdock/hafnian.h"

namespace gbsdock {

std::string source_name(SampleSource source) {
    switch (source) {
        case SampleSource::Gbs:
            return "gbs";
        case SampleSource::GbsPostselected:
            return "gbs_postselected";
        case SampleSource::Classical:
            return "classical";
    }
    return "unknown";
}

namespace {

using Real = long double;
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RowMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Cholesky factor grown one row at a time; rows past the current depth are
// scratch and get overwritten when the walk backtracks.
struct GrowingCholesky {
    const RealMatrix *schur;
    RowMatrix factor;
    std::vector<int> chosen;

    explicit GrowingCholesky(const RealMatrix &s)
        : schur(&s), factor(s.rows(), s.rows()), chosen(static_cast<std::size_t>(s.rows())) {}

    // Returns the new diagonal entry of the factor.
    Real add(int pos, int index) {
        const RealMatrix &s = *schur;
        for (int j = 0; j < pos; ++j) {
            const Real v = s(index, chosen[j]) - factor.row(pos).head(j).dot(factor.row(j).head(j));
            factor(pos, j) = v / factor(j, j);
        }
        const Real d2 = s(index, index) - factor.row(pos).head(pos).squaredNorm();
        if (!(d2 > 0)) throw NumericalError("conditional covariance lost positive definiteness");
        chosen[pos] = index;
        return factor(pos, pos) = std::sqrt(d2);
    }
};

// sum over Z subset of the clicked modes of (-1)^|Z| / sqrt(det S_Z), i.e. the
// probability that every clicked mode fires in the state whose sigma + I/2
// blocks are the given Schur complements.
class SubsetWalk {
   public:
    SubsetWalk(const std::vector<RealMatrix> &schur, int rows_per_mode, int clicked)
        : rows_per_mode_(rows_per_mode), clicked_(clicked) {
        for (const auto &s : schur) factors_.emplace_back(s);
    }

    Real run() {
        sum_ = 1;
        walk(0, 0, 1);
        return sum_;
    }

   private:
    void walk(int next, int depth, Real inverse_root) {
        for (int c = next; c < clicked_; ++c) {
            Real root = 1;
            for (auto &f : factors_) {
                for (int r = 0; r < rows_per_mode_; ++r) {
                    root *= f.add(depth * rows_per_mode_ + r, c * rows_per_mode_ + r);
                }
            }
            const Real term = inverse_root / root;
            sum_ += (depth % 2 == 0) ? -term : term;
            walk(c + 1, depth + 1, term);
        }
    }

    std::vector<GrowingCholesky> factors_;
    int rows_per_mode_;
    int clicked_;
    Real sum_ = 0;
};

// Rows of the system matrix belonging to `modes`, grouped per mode.
std::vector<int> system_rows(const std::vector<int> &modes, int rows_per_mode, int offset) {
    std::vector<int> idx;
    idx.reserve(modes.size() * rows_per_mode);
    for (int j : modes) {
        idx.push_back(j);
        if (rows_per_mode == 2) idx.push_back(j + offset);
    }
    return idx;
}

Real conditional_all_click(const std::vector<RealMatrix> &schur, int rows_per_mode, int clicked) {
    if (clicked == 0) return 1;
    return SubsetWalk(schur, rows_per_mode, clicked).run();
}

}  // namespace

struct ThresholdChainSampler::Conditioned {
    std::vector<RealMatrix> schur;  // per quadrature system, rows grouped per listed mode
    Real quiet_root = 1;            // sqrt(det Q_W)
};

struct ThresholdChainSampler::Step {
    double p_quiet = 1.0;
    Real clicked_given_quiet_and_mode = 1;
    Conditioned conditioned;
};

ThresholdChainSampler::ThresholdChainSampler(const GaussianState &s) : modes_(s.modes()) {
    if (modes_ > kChainMaxModes) {
        throw SizeError("chain-rule sampler limited to " + std::to_string(kChainMaxModes) + " modes");
    }
    Eigen::MatrixXd q = s.covariance();
    q.diagonal().array() += 0.5;
    split_ = q.topRightCorner(modes_, modes_).cwiseAbs().maxCoeff() == 0.0;
    if (split_) {
        systems_ = {q.topLeftCorner(modes_, modes_).cast<Real>(), q.bottomRightCorner(modes_, modes_).cast<Real>()};
    } else {
        systems_ = {q.cast<Real>()};
    }
}

int ThresholdChainSampler::rows_per_mode() const { return split_ ? 1 : 2; }

ThresholdChainSampler::Conditioned ThresholdChainSampler::condition(const std::vector<int> &modes,
                                                                    const std::vector<int> &quiet) const {
    Conditioned out;
    const int rpm = rows_per_mode();
    for (const auto &q : systems_) {
        const auto ic = system_rows(modes, rpm, modes_);
        const auto iw = system_rows(quiet, rpm, modes_);
        RealMatrix schur = q(ic, ic);
        if (!iw.empty()) {
            Eigen::LLT<RealMatrix> llt(q(iw, iw));
            if (llt.info() != Eigen::Success) throw NumericalError("sigma + I/2 is not positive definite");
            out.quiet_root *= llt.matrixLLT().diagonal().prod();
            if (!ic.empty()) {
                const RealMatrix y = llt.matrixL().solve(q(iw, ic));
                schur.noalias() -= y.transpose() * y;
            }
        }
        out.schur.push_back(std::move(schur));
    }
    return out;
}

double ThresholdChainSampler::joint_probability(const std::vector<int> &clicked, const std::vector<int> &quiet) {
    const Conditioned c = condition(clicked, quiet);
    return static_cast<double>(conditional_all_click(c.schur, rows_per_mode(), static_cast<int>(clicked.size())) /
                               c.quiet_root);
}

ThresholdChainSampler::Step ThresholdChainSampler::step(const std::vector<int> &clicked,
                                                        const std::vector<int> &quiet, int mode,
                                                        long double clicked_given_quiet) const {
    // Condition the clicked modes and `mode` on the quiet prefix, then split
    // `mode` (placed last) off the Schur complement.
    std::vector<int> rows = clicked;
    rows.push_back(mode);
    const Conditioned c = condition(rows, quiet);
    const int rpm = rows_per_mode();
    const int nc = static_cast<int>(clicked.size()) * rpm;

    Step out;
    Real mode_root = 1;
    std::vector<RealMatrix> reduced;
    for (const auto &s : c.schur) {
        const RealMatrix skk = s.bottomRightCorner(rpm, rpm);
        Eigen::LLT<RealMatrix> llt(skk);
        if (llt.info() != Eigen::Success) throw NumericalError("conditional covariance lost positive definiteness");
        mode_root *= llt.matrixLLT().diagonal().prod();
        RealMatrix r = s.topLeftCorner(nc, nc);
        if (nc > 0) {
            const RealMatrix y = llt.matrixL().solve(s.bottomLeftCorner(rpm, nc));
            r.noalias() -= y.transpose() * y;
        }
        reduced.push_back(std::move(r));
    }
    const Real clicked_given_quiet_and_mode =
        conditional_all_click(reduced, rpm, static_cast<int>(clicked.size()));
    // P(mode quiet | prefix) = P(mode quiet | quiet prefix) * P(C | W + mode) / P(C | W)
    const Real ratio = clicked_given_quiet > 0 ? clicked_given_quiet_and_mode / clicked_given_quiet : 0;
    out.p_quiet = static_cast<double>(ratio / mode_root);
    out.clicked_given_quiet_and_mode = clicked_given_quiet_and_mode;
    out.conditioned = c;
    return out;
}

namespace {

double checked_conditional(double p) {
    if (p < -1e-9 || p > 1.0 + 1e-9) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "conditional no-click probability " << p << " outside [0, 1]";
        throw NumericalError(msg.str());
    }
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

template <typename Decide>
double ThresholdChainSampler::walk_chain(Decide &&decide) {
    std::vector<int> clicked, quiet;
    Real clicked_given_quiet = 1;  // P(all clicked fire | quiet prefix empty)
    double probability = 1.0;
    for (int k = 0; k < modes_; ++k) {
        Step s = step(clicked, quiet, k, clicked_given_quiet);
        const double p_quiet = checked_conditional(s.p_quiet);
        if (decide(k, p_quiet)) {
            quiet.push_back(k);
            clicked_given_quiet = s.clicked_given_quiet_and_mode;
            probability *= p_quiet;
        } else {
            clicked.push_back(k);
            clicked_given_quiet =
                conditional_all_click(s.conditioned.schur, rows_per_mode(), static_cast<int>(clicked.size()));
            probability *= 1.0 - p_quiet;
        }
    }
    return probability;
}

ClickPattern ThresholdChainSampler::sample(Rng &rng) {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(modes_), 0);
    walk_chain([&](int k, double p_quiet) {
        const bool quiet = rng.uniform() < p_quiet;
        out[k] = quiet ? 0 : 1;
        return quiet;
    });
    return ClickPattern(std::move(out));
}

double ThresholdChainSampler::pattern_probability(const ClickPattern &pattern) {
    if (pattern.modes() != modes_) throw ValidationError("click pattern length does not match the state");
    return walk_chain([&](int k, double) { return pattern.clicks[k] == 0; });
}

SampleBatch sample_threshold_chain(const GaussianState &s, int count, std::uint64_t seed, int threads) {
    if (count < 0) throw ValidationError("sample count must be non-negative");
    const ThresholdChainSampler prototype(s);
    SampleBatch batch;
    batch.modes = s.modes();
    batch.seed = seed;
    batch.source = SampleSource::Gbs;
    batch.patterns.resize(static_cast<std::size_t>(count));

    const int shards = (count + kShardSize - 1) / kShardSize;
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        ThresholdChainSampler sampler = prototype;
        try {
            for (int shard = next++; shard < shards; shard = next++) {
                Rng rng(seed + static_cast<std::uint64_t>(shard));
                const int end = std::min(count, (shard + 1) * kShardSize);
                for (int i = shard * kShardSize; i < end; ++i) batch.patterns[i] = sampler.sample(rng);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = shards;
        }
    };
    const int workers = std::clamp(threads, 1, std::max(shards, 1));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    batch.provenance = {{"sampler", "threshold_chain"}, {"shard_size", kShardSize}};
    return batch;
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<long long>(std::llround(r));
}

struct WeightedSubsets {
    std::vector<std::uint32_t> masks;
    std::vector<double> cumulative;
};

WeightedSubsets postselected_weights(const WeightedGraph &g, const Encoding &e, int n_clicks) {
    const int m = g.n();
    if (e.modes() != m) throw DimensionError("encoding does not match the graph");
    if (n_clicks < 0 || n_clicks > m) throw ValidationError("click count outside [0, M]");
    if (m > kChainMaxModes) throw SizeError("post-selection limited to " + std::to_string(kChainMaxModes) + " modes");
    if (binomial(m, n_clicks) > kPostselectMaxSubsets) {
        throw SizeError("C(" + std::to_string(m) + ", " + std::to_string(n_clicks) + ") subsets exceed the limit of " +
                        std::to_string(kPostselectMaxSubsets));
    }
    if (n_clicks % 2 == 1) {
        throw NumericalError("degenerate distribution: no perfect matchings exist on an odd number of clicks");
    }
    WeightedSubsets out;
    double total = 0.0;
    std::vector<int> idx(static_cast<std::size_t>(n_clicks));
    const std::uint32_t limit = std::uint32_t{1} << m;
    // Gosper's hack walks the n_clicks-subsets in increasing bitmask order.
    for (std::uint32_t mask = n_clicks == 0 ? 0u : (std::uint32_t{1} << n_clicks) - 1; mask < limit;) {
        int k = 0;
        double det_omega = 1.0;
        for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            idx[k] = std::countr_zero(bits);
            det_omega *= e.omega[idx[k]];
            ++k;
        }
        const double haf = hafnian(g.adjacency()(idx, idx));
        if (haf != 0.0) {
            total += (det_omega * haf) * (det_omega * haf);
            out.masks.push_back(mask);
            out.cumulative.push_back(total);
        }
        if (mask == 0) break;
        const std::uint32_t low = mask & -mask;
        const std::uint32_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    if (out.masks.empty()) throw NumericalError("degenerate distribution: every subset has zero Hafnian");
    return out;
}

ClickPattern pattern_from_mask(std::uint32_t mask, int m) {
    std::vector<std::uint8_t> c(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < m; ++j) c[j] = (mask >> j) & 1u;
    return ClickPattern(std::move(c));
}

}  // namespace

std::vector<std::pair<VertexSet, double>> postselected_distribution(const WeightedGraph &g, const Encoding &e,
                                                                    int n_clicks) {
    const auto w = postselected_weights(g, e, n_clicks);
    std::vector<std::pair<VertexSet, double>> out;
    double previous = 0.0;
    for (std::size_t i = 0; i < w.masks.size(); ++i) {
        std::vector<std::uint8_t> ind = pattern_from_mask(w.masks[i], g.n()).clicks;
        out.emplace_back(VertexSet::from_indicator(ind), (w.cumulative[i] - previous) / w.cumulative.back());
        previous = w.cumulative[i];
    }
    return out;
}

SampleBatch sample_postselected(const WeightedGraph &g, const Encoding &e, int n_clicks, int count,
                                std::uint64_t seed) {
    if (count < 0) throw ValidationError("sample count must be non-negative");
    const auto w = postselected_weights(g, e, n_clicks);
    SampleBatch batch;
    batch.modes = g.n();
    batch.seed = seed;
    batch.source = SampleSource::GbsPostselected;
    batch.patterns.reserve(static_cast<std::size_t>(count));
    Rng rng(seed);
    const double total = w.cumulative.back();
    for (int i = 0; i < count; ++i) {
        const double target = rng.uniform() * total;
        auto it = std::upper_bound(w.cumulative.begin(), w.cumulative.end(), target);
        if (it == w.cumulative.end()) --it;
        batch.patterns.push_back(pattern_from_mask(w.masks[it - w.cumulative.begin()], g.n()));
    }
    batch.provenance = {{"sampler", "postselected"}, {"clicks", n_clicks}, {"encoding", encoding_to_json(e)}};
    return batch;
}

namespace {

ClickPattern random_subset(int modes, int size, Rng &rng, std::vector<int> &scratch) {
    scratch.resize(static_cast<std::size_t>(modes));
    for (int j = 0; j < modes; ++j) scratch[j] = j;
    std::vector<std::uint8_t> c(static_cast<std::size_t>(modes), 0);
    for (int i = 0; i < size; ++i) {
        const auto pick = i + static_cast<int>(rng.index(static_cast<std::uint64_t>(modes - i)));
        std::swap(scratch[i], scratch[pick]);
        c[scratch[i]] = 1;
    }
    return ClickPattern(std::move(c));
}

}  // namespace

SampleBatch classical_baseline(int modes, double mean_n, double var_n, int count, std::uint64_t seed) {
    if (modes < 1) throw ValidationError("baseline needs at least one mode");
    if (!(var_n > 0.0) || !std::isfinite(var_n) || !std::isfinite(mean_n)) {
        throw ValidationError("baseline variance must be positive and finite");
    }
    if (count < 0) throw ValidationError("sample count must be non-negative");
    SampleBatch batch;
    batch.modes = modes;
    batch.seed = seed;
    batch.source = SampleSource::Classical;
    batch.patterns.reserve(static_cast<std::size_t>(count));
    Rng rng(seed);
    std::vector<int> scratch;
    const double stddev = std::sqrt(var_n);
    for (int i = 0; i < count; ++i) {
        const double draw = std::round(rng.normal(mean_n, stddev));
        const int size = static_cast<int>(std::clamp(draw, 0.0, static_cast<double>(modes)));
        batch.patterns.push_back(random_subset(modes, size, rng, scratch));
    }
    batch.provenance = {{"sampler", "classical_baseline"}, {"mean", mean_n}, {"variance", var_n}};
    return batch;
}

SampleBatch uniform_subsets(int modes, int size, int count, std::uint64_t seed) {
    if (modes < 1 || size < 0 || size > modes) throw ValidationError("subset size outside [0, M]");
    if (count < 0) throw ValidationError("sample count must be non-negative");
    SampleBatch batch;
    batch.modes = modes;
    batch.seed = seed;
    batch.source = SampleSource::Classical;
    batch.patterns.reserve(static_cast<std::size_t>(count));
    Rng rng(seed);
    std::vector<int> scratch;
    for (int i = 0; i < count; ++i) batch.patterns.push_back(random_subset(modes, size, rng, scratch));
    batch.provenance = {{"sampler", "uniform_subsets"}, {"size", size}};
    return batch;
}

ClickMoments estimate_moments(const SampleBatch &batch) {
    if (batch.patterns.empty()) throw ValidationError("cannot estimate moments of an empty batch");
    const double n = static_cast<double>(batch.size());
    double sum = 0.0;
    for (const auto &p : batch.patterns) sum += p.count();
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto &p : batch.patterns) ss += (p.count() - mean) * (p.count() - mean);
    return {mean, batch.size() > 1 ? ss / (n - 1.0) : 0.0};
}

void write_batch_csv(const SampleBatch &batch, std::ostream &out) {
    out << "bitstring,clicks\n";
    for (const auto &p : batch.patterns) out << p.bitstring() << ',' << p.count() << '\n';
}

SampleBatch read_batch_csv(std::istream &in) {
    SampleBatch b;
    b.modes = -1;
    std::string line;
    if (!std::getline(in, line) || line.rfind("bitstring", 0) != 0) {
        throw ValidationError("sample CSV must start with a 'bitstring' header");
    }
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::string bits = line.substr(0, line.find(','));
        std::vector<std::uint8_t> clicks;
        for (char ch : bits) {
            if (ch != '0' && ch != '1') {
                throw ValidationError("sample CSV line " + std::to_string(lineno) + ": bad bitstring");
            }
            clicks.push_back(ch == '1');
        }
        if (b.modes < 0) b.modes = static_cast<int>(clicks.size());
        if (static_cast<int>(clicks.size()) != b.modes || b.modes == 0) {
            throw ValidationError("sample CSV line " + std::to_string(lineno) + ": inconsistent pattern length");
        }
        b.patterns.emplace_back(std::move(clicks));
    }
    if (b.modes < 0) throw ValidationError("sample CSV holds no samples");
    return b;
}

nlohmann::json batch_sidecar(const SampleBatch &batch) {
    return {{"modes", batch.modes},
            {"samples", batch.size()},
            {"seed", batch.seed},
            {"source", source_name(batch.source)},
            {"provenance", batch.provenance}};
}

}  // namespace gbsdock
