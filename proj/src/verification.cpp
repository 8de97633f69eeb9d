#include "wsncov/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "wsncov/disjoint_sets.hpp"
#include "wsncov/error.hpp"

namespace wsncov {

namespace {

std::vector<Point> positions_of(const Deployment& dep) {
    std::vector<Point> positions;
    positions.reserve(dep.size());
    for (const Node& node : dep.nodes()) positions.push_back(node.position);
    return positions;
}

double max_sensing_radius(const Deployment& dep) {
    double radius = dep.sensing_radius();
    for (const Node& node : dep.nodes()) radius = std::max(radius, node.sensing_radius);
    return radius;
}

unsigned resolve_threads(unsigned requested, std::size_t work_items) {
    unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, work_items)));
}

// Runs count_item(k) for k in [0, items) across threads and sums the results.
// Items are dealt round-robin; the total is an integer so order is irrelevant.
template <typename CountItem>
std::size_t parallel_count(std::size_t items, unsigned threads, CountItem count_item) {
    threads = resolve_threads(threads, items);
    std::vector<std::size_t> partial(threads, 0);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                std::size_t sum = 0;
                for (std::size_t k = t; k < items; k += threads) sum += count_item(k);
                partial[t] = sum;
            });
        }
    }
    std::size_t total = 0;
    for (std::size_t v : partial) total += v;
    return total;
}

}  // namespace

int point_coverage(Point z, const Node& s) {
    return within_closed_disk(s.position, s.sensing_radius, z) ? 1 : 0;
}

std::size_t coverage_degree(Point z, const Deployment& dep) {
    std::size_t degree = 0;
    for (const Node& node : dep.nodes()) degree += static_cast<std::size_t>(point_coverage(z, node));
    return degree;
}

CoverageIndex::CoverageIndex(const Deployment& dep)
    : dep_(&dep), positions_(positions_of(dep)), grid_(positions_, max_sensing_radius(dep)) {}

std::size_t CoverageIndex::degree(Point z) const {
    std::size_t degree = 0;
    const auto& nodes = dep_->nodes();
    grid_.for_each_candidate(z, [&](std::size_t i) {
        degree += static_cast<std::size_t>(point_coverage(z, nodes[i]));
    });
    return degree;
}

bool CoverageIndex::covered(Point z) const {
    bool hit = false;
    const auto& nodes = dep_->nodes();
    grid_.for_each_candidate(z, [&](std::size_t i) {
        if (!hit && point_coverage(z, nodes[i]) == 1) hit = true;
    });
    return hit;
}

std::size_t network_coverage_degree(const Deployment& dep, std::span<const Point> samples) {
    if (samples.empty()) {
        throw DomainError("network coverage degree needs at least one sample point");
    }
    const CoverageIndex index(dep);
    std::size_t minimum = std::numeric_limits<std::size_t>::max();
    for (const Point& z : samples) {
        minimum = std::min(minimum, index.degree(z));
        if (minimum == 0) break;
    }
    return minimum;
}

std::vector<Point> grid_samples(const SensingField& rect, std::size_t resolution) {
    if (resolution == 0) {
        throw DomainError("grid resolution must be positive");
    }
    std::vector<Point> points;
    points.reserve(resolution * resolution);
    const double step_x = rect.width() / static_cast<double>(resolution);
    const double step_y = rect.height() / static_cast<double>(resolution);
    for (std::size_t j = 0; j < resolution; ++j) {
        for (std::size_t i = 0; i < resolution; ++i) {
            points.push_back({rect.min_x() + (static_cast<double>(i) + 0.5) * step_x,
                              rect.min_y() + (static_cast<double>(j) + 0.5) * step_y});
        }
    }
    return points;
}

std::string_view to_string(SamplingMode mode) {
    return mode == SamplingMode::MonteCarlo ? "MONTE_CARLO" : "GRID";
}

std::string_view to_string(SamplingWindow window) {
    return window == SamplingWindow::FullField ? "FULL_FIELD" : "INTERIOR";
}

SensingField sampling_window(const Deployment& dep, SamplingWindow window) {
    const SensingField& field = dep.field();
    if (window == SamplingWindow::FullField) return field;

    const double margin = kInteriorMarginSpacings * dep.spacing();
    const double width = field.width() - 2.0 * margin;
    const double height = field.height() - 2.0 * margin;
    if (!(width > 0.0) || !(height > 0.0)) {
        throw DomainError("interior window is empty: field must exceed " +
                          std::to_string(2.0 * margin) + " (4 x spacing) in both dimensions");
    }
    return SensingField(width, height, {field.min_x() + margin, field.min_y() + margin});
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

MonteCarloStream::MonteCarloStream(std::uint64_t seed, std::uint64_t block)
    : engine_(splitmix64(seed + block * 0x9E3779B97F4A7C15ULL)) {}

double MonteCarloStream::next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Point MonteCarloStream::next_point(const SensingField& rect) {
    const double u = next_unit();
    const double v = next_unit();
    return {rect.min_x() + u * rect.width(), rect.min_y() + v * rect.height()};
}

CoverageEstimate estimate_coverage_fraction(const Deployment& dep, SamplingMode mode,
                                            SamplingWindow window,
                                            std::size_t samples_or_resolution,
                                            std::uint64_t seed, unsigned threads) {
    if (mode == SamplingMode::MonteCarlo && samples_or_resolution < 1) {
        throw DomainError("Monte Carlo estimation needs at least one sample");
    }
    if (mode == SamplingMode::Grid && samples_or_resolution < 2) {
        throw DomainError("grid estimation needs a resolution of at least 2 per axis");
    }
    const SensingField rect = sampling_window(dep, window);
    const CoverageIndex index(dep);

    CoverageEstimate estimate;
    estimate.mode = mode;
    estimate.window = window;

    std::size_t covered = 0;
    if (mode == SamplingMode::MonteCarlo) {
        const std::size_t n = samples_or_resolution;
        const std::size_t blocks = (n + MonteCarloStream::kBlockSize - 1) / MonteCarloStream::kBlockSize;
        covered = parallel_count(blocks, threads, [&](std::size_t block) {
            MonteCarloStream stream(seed, block);
            const std::size_t begin = block * MonteCarloStream::kBlockSize;
            const std::size_t end = std::min(n, begin + MonteCarloStream::kBlockSize);
            std::size_t hits = 0;
            for (std::size_t i = begin; i < end; ++i) {
                if (index.covered(stream.next_point(rect))) ++hits;
            }
            return hits;
        });
        estimate.sample_count = n;
    } else {
        const std::size_t res = samples_or_resolution;
        const double step_x = rect.width() / static_cast<double>(res);
        const double step_y = rect.height() / static_cast<double>(res);
        covered = parallel_count(res, threads, [&](std::size_t j) {
            const double y = rect.min_y() + (static_cast<double>(j) + 0.5) * step_y;
            std::size_t hits = 0;
            for (std::size_t i = 0; i < res; ++i) {
                const Point z{rect.min_x() + (static_cast<double>(i) + 0.5) * step_x, y};
                if (index.covered(z)) ++hits;
            }
            return hits;
        });
        estimate.sample_count = res * res;
    }

    const double n = static_cast<double>(estimate.sample_count);
    estimate.fraction = static_cast<double>(covered) / n;
    if (mode == SamplingMode::MonteCarlo) {
        const double p = estimate.fraction;
        estimate.half_width_95 = 1.96 * std::sqrt(p * (1.0 - p) / n);
    }
    return estimate;
}

CommGraph::CommGraph(double rc, std::vector<std::vector<NodeId>> adjacency)
    : rc_(rc), adjacency_(std::move(adjacency)), labels_(adjacency_.size()) {
    DisjointSets sets(adjacency_.size());
    std::size_t half_edges = 0;
    for (NodeId i = 0; i < adjacency_.size(); ++i) {
        std::sort(adjacency_[i].begin(), adjacency_[i].end());
        half_edges += adjacency_[i].size();
        for (NodeId j : adjacency_[i]) sets.unite(i, j);
    }
    edge_count_ = half_edges / 2;

    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> label_of_root(adjacency_.size(), kUnset);
    for (NodeId i = 0; i < adjacency_.size(); ++i) {
        std::size_t& label = label_of_root[sets.find(i)];
        if (label == kUnset) label = component_count_++;
        labels_[i] = label;
    }
}

CommGraph build_comm_graph(const Deployment& dep, double rc) {
    if (!(rc > 0.0) || !std::isfinite(rc)) {
        throw DomainError("communication radius must be positive");
    }
    const std::vector<Point> positions = positions_of(dep);
    std::vector<std::vector<NodeId>> adjacency(positions.size());
    if (!positions.empty()) {
        const SpatialGrid grid(positions, rc);
        for (std::size_t i = 0; i < positions.size(); ++i) {
            grid.for_each_candidate(positions[i], [&](std::size_t j) {
                if (j != i && within_closed_disk(positions[i], rc, positions[j])) {
                    adjacency[i].push_back(j);
                }
            });
        }
    }
    return CommGraph(rc, std::move(adjacency));
}

ConnectivityReport check_connectivity(const Deployment& dep, double rc) {
    if (dep.empty()) {
        throw DomainError("connectivity is undefined for an empty deployment");
    }
    const CommGraph graph = build_comm_graph(dep, rc);
    return {graph.connected(), graph.component_count(), rc};
}

bool is_connected(const Deployment& dep, double rc) {
    return check_connectivity(dep, rc).connected;
}

}  // namespace wsncov
