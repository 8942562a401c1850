#ifndef QOT_DATASET_HPP
#define QOT_DATASET_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qot/matrix.hpp"
#include "qot/phy.hpp"
#include "qot/traffic.hpp"

namespace qot {

/// The seven lightpath features fed to the classifiers.
struct FeatureVector {
    double total_length_km = 0.0;       // x1
    double max_link_length_km = 0.0;    // x2
    double central_frequency = 0.0;     // x3, slot units: start + count/2
    int slot_count = 0;                 // x4
    int modulation_code = 0;            // x5
    int edfa_count = 0;                 // x6
    int link_count = 0;                 // x7

    std::array<double, 7> as_array() const {
        return {total_length_km,
                max_link_length_km,
                central_frequency,
                static_cast<double>(slot_count),
                static_cast<double>(modulation_code),
                static_cast<double>(edfa_count),
                static_cast<double>(link_count)};
    }
};

constexpr int kFeatureCount = 7;

struct Pattern {
    FeatureVector x;
    double ber = 0.0;
    int slice_index = 1;  // k in 1..K
    int class_v = 1;      // multiclass label in 1..K+1
    int binary_y = 0;     // 1 iff ber < B_{slice_index}
};

struct Dataset {
    std::vector<Pattern> patterns;
    SliceProfile slices;
    std::uint64_t seed = 0;
    std::string config_hash;

    std::size_t size() const { return patterns.size(); }
};

FeatureVector extract_features(const Lightpath& lp, const Topology& topology, const PhyConfig& phy);

// Class 1: ber < B_1; class v: B_{v-1} <= ber < B_v; class K+1: ber >= B_K.
// Boundary values go to the higher class.
int encode_multiclass(double ber, const SliceProfile& slices);

// 1 iff ber < threshold.
int encode_binary(double ber, double threshold);

// Feature extraction and labeling over all lightpaths (OpenMP parallel;
// output order matches input order).
Dataset build_dataset(const std::vector<Lightpath>& lightpaths, const Topology& topology,
                      const PhyConfig& phy, const SliceProfile& slices, std::uint64_t seed,
                      std::string config_hash);

// Re-label an existing dataset against a different threshold set. Keeps the
// stored slice assignment when the profile is unchanged; otherwise slices are
// re-drawn uniformly and deterministically from the dataset seed.
Dataset relabel(const Dataset& dataset, const SliceProfile& slices);

// D_k in slice order; disjoint cover of the input, order preserved.
std::vector<Dataset> partition(const Dataset& dataset);

// Per-pattern-class counts, index 0 unused; index v = patterns with class v.
std::vector<long> class_histogram(const Dataset& dataset);

struct NormStats {
    std::array<double, kFeatureCount> mean{};
    std::array<double, kFeatureCount> stddev{};  // 1.0 for constant features
};

// z-score statistics over the given rows only (the training split).
NormStats fit_normalizer(const Matrix& features, const std::vector<std::size_t>& rows);

// Apply train-split statistics to every row.
Matrix apply_normalizer(const Matrix& features, const NormStats& stats);

Matrix feature_matrix(const Dataset& dataset);
std::vector<int> multiclass_targets(const Dataset& dataset);  // 1-based class ids
// Binary targets mapped onto 2-class ids: feasible -> 1, infeasible -> 2,
// matching the multiclass ordering (lower class = better QoT).
std::vector<int> binary_targets(const Dataset& dataset);

void write_csv(const Dataset& dataset, std::ostream& out);
void write_csv_file(const Dataset& dataset, const std::string& path);
Dataset read_csv(std::istream& in);
Dataset read_csv_file(const std::string& path);

}  // namespace qot

#endif
