#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "wsncov/deployment.hpp"
#include "wsncov/geometry.hpp"
#include "wsncov/spatial_grid.hpp"

namespace wsncov {

// --- point and k-coverage ---------------------------------------------------

// 1 iff z lies in the closed sensing disk of s.
int point_coverage(Point z, const Node& s);

// Number of nodes whose sensing disk contains z. Plain sum over all nodes.
std::size_t coverage_degree(Point z, const Deployment& dep);

// Bucketed equivalent of coverage_degree for repeated queries against one
// deployment. Holds a reference; the deployment must outlive the index.
class CoverageIndex {
public:
    explicit CoverageIndex(const Deployment& dep);

    std::size_t degree(Point z) const;
    bool covered(Point z) const;

private:
    const Deployment* dep_;
    std::vector<Point> positions_;
    SpatialGrid grid_;
};

// Minimum coverage degree over the samples: a sampled stand-in for the
// minimum over every point of the field.
std::size_t network_coverage_degree(const Deployment& dep, std::span<const Point> samples);

// resolution x resolution cell-centred points over the rectangle, row-major.
std::vector<Point> grid_samples(const SensingField& rect, std::size_t resolution);

// --- coverage fraction estimation ---------------------------------------------

enum class SamplingMode { MonteCarlo, Grid };
enum class SamplingWindow { FullField, Interior };

std::string_view to_string(SamplingMode mode);
std::string_view to_string(SamplingWindow window);

// Interior windows drop a margin of this many lattice spacings on every side,
// beyond which a point sees the same neighborhood as in the infinite lattice.
inline constexpr double kInteriorMarginSpacings = 2.0;

// Region sampled for the given window. Throws DomainError naming the minimum
// field size when the interior window is empty.
SensingField sampling_window(const Deployment& dep, SamplingWindow window);

// Deterministic uniform stream used by Monte Carlo estimation.
//
// Sample i belongs to block i / kBlockSize. Block b draws from a
// std::mt19937_64 seeded with splitmix64(seed + b * 0x9E3779B97F4A7C15);
// each sample takes two consecutive outputs (x then y), each mapped to
// [0, 1) as (u >> 11) * 2^-53. Any partition of the blocks over threads
// therefore sees the same points.
class MonteCarloStream {
public:
    static constexpr std::size_t kBlockSize = 1 << 16;

    MonteCarloStream(std::uint64_t seed, std::uint64_t block);

    double next_unit();
    Point next_point(const SensingField& rect);

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct CoverageEstimate {
    double fraction = 0.0;
    std::size_t sample_count = 0;
    double half_width_95 = 0.0;  // 1.96 sqrt(p(1-p)/n) for Monte Carlo, 0 for grid
    SamplingMode mode = SamplingMode::MonteCarlo;
    SamplingWindow window = SamplingWindow::Interior;
};

// Fraction of sample points covered by at least one node. In Monte Carlo mode
// `samples_or_resolution` is the sample count; in grid mode it is the number
// of grid points per axis (>= 2). `threads` = 0 picks the hardware
// concurrency; the result does not depend on it.
CoverageEstimate estimate_coverage_fraction(const Deployment& dep, SamplingMode mode,
                                            SamplingWindow window,
                                            std::size_t samples_or_resolution,
                                            std::uint64_t seed, unsigned threads = 0);

// --- communication graph ------------------------------------------------------

class CommGraph {
public:
    CommGraph(double rc, std::vector<std::vector<NodeId>> adjacency);

    double rc() const { return rc_; }
    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<std::vector<NodeId>>& adjacency() const { return adjacency_; }
    const std::vector<std::size_t>& component_labels() const { return labels_; }
    std::size_t component_count() const { return component_count_; }
    bool connected() const { return component_count_ == 1; }

private:
    double rc_;
    std::vector<std::vector<NodeId>> adjacency_;  // sorted ascending per node
    std::vector<std::size_t> labels_;             // numbered by first appearance in id order
    std::size_t component_count_ = 0;
    std::size_t edge_count_ = 0;
};

// Nodes i and j are adjacent iff their distance is at most rc. Built from a
// bucket grid with cell size rc.
CommGraph build_comm_graph(const Deployment& dep, double rc);

struct ConnectivityReport {
    bool connected = false;
    std::size_t components = 0;
    double rc = 0.0;
};

ConnectivityReport check_connectivity(const Deployment& dep, double rc);

// True iff the communication graph has a single component. A designated base
// station is one of the nodes, so it is reachable whenever this holds.
bool is_connected(const Deployment& dep, double rc);

}  // namespace wsncov
