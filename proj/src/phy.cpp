#include "qot/phy.hpp"

#include <algorithm>
#include <cmath>

#include "qot/errors.hpp"

namespace qot {

namespace {

constexpr double kPlanckJs = 6.62607015e-34;
constexpr double kCarrierHz = 193.4e12;  // C-band reference carrier
constexpr double kBerFloor = 1e-15;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

struct SpanLayout {
    int full_spans = 0;
    double remainder_km = 0.0;  // 0 when the length divides evenly

    int amp_count() const { return full_spans + (remainder_km > 0.0 ? 1 : 0); }
};

SpanLayout split_spans(double length_km, double span_length_km) {
    SpanLayout layout;
    layout.full_spans = static_cast<int>(std::floor(length_km / span_length_km));
    const double rem = length_km - layout.full_spans * span_length_km;
    layout.remainder_km = rem > 1e-9 ? rem : 0.0;
    return layout;
}

// SNR scaling of the erfc argument per format, from the Gray-coded
// approximations: BPSK erfc(sqrt(SNR)), QPSK erfc(sqrt(SNR/2)),
// 8-QAM erfc(sqrt(3 SNR/14)), 16-QAM erfc(sqrt(SNR/10)).
double snr_scale(int format_code) {
    switch (format_code) {
        case 1: return 1.0;
        case 2: return 0.5;
        case 3: return 3.0 / 14.0;
        case 4: return 0.1;
        default: throw ValidationError("unknown modulation code " + std::to_string(format_code));
    }
}

}  // namespace

void PhyConfig::validate() const {
    if (!(span_length_km > 0.0) || !(fiber_loss_db_per_km > 0.0) ||
        !(reference_bandwidth_ghz > 0.0))
        throw ValidationError("phy parameters must be physically positive");
    if (!(nonlinear_penalty_db_per_1000km >= 0.0))
        throw ValidationError("nonlinear penalty coefficient must be nonnegative");
}

int edfa_count(std::span<const double> link_lengths_km, const PhyConfig& phy) {
    int amps = 0;
    for (const double len : link_lengths_km) {
        if (!(len > 0.0)) throw ValidationError("link length must be positive");
        amps += split_spans(len, phy.span_length_km).amp_count();
    }
    return amps;
}

int edfa_count(const Topology& topology, const Path& path, const PhyConfig& phy) {
    const auto lengths = link_lengths(topology, path);
    return edfa_count(std::span<const double>(lengths), phy);
}

double estimate_ber(std::span<const double> link_lengths_km, const ModulationFormat& format,
                    const PhyConfig& phy) {
    if (link_lengths_km.empty()) throw ValidationError("estimate_ber needs a non-empty path");

    // Accumulated ASE power: each amplifier contributes NF*(G-1)*h*nu*B_ref
    // with gain G exactly compensating its span loss.
    const double nf_lin = db_to_linear(phy.amp_noise_figure_db);
    const double bref_hz = phy.reference_bandwidth_ghz * 1e9;
    const double photon_power = kPlanckJs * kCarrierHz * bref_hz;
    double ase_w = 0.0;
    double total_length_km = 0.0;
    for (const double len : link_lengths_km) {
        if (!(len > 0.0)) throw ValidationError("link length must be positive");
        total_length_km += len;
        const SpanLayout layout = split_spans(len, phy.span_length_km);
        const double full_gain = db_to_linear(phy.fiber_loss_db_per_km * phy.span_length_km);
        ase_w += layout.full_spans * nf_lin * (full_gain - 1.0) * photon_power;
        if (layout.remainder_km > 0.0) {
            const double rem_gain = db_to_linear(phy.fiber_loss_db_per_km * layout.remainder_km);
            ase_w += nf_lin * (rem_gain - 1.0) * photon_power;
        }
    }

    const double launch_w = 1e-3 * db_to_linear(phy.launch_power_dbm);
    const double snr_db = 10.0 * std::log10(launch_w / ase_w) -
                          phy.nonlinear_penalty_db_per_1000km * total_length_km / 1000.0;
    const double snr_eff = db_to_linear(snr_db) * snr_scale(format.code);
    const double ber = 0.5 * std::erfc(std::sqrt(snr_eff));
    return std::clamp(ber, kBerFloor, 0.5);
}

double estimate_ber(const Topology& topology, const Path& path, const ModulationFormat& format,
                    const PhyConfig& phy) {
    const auto lengths = link_lengths(topology, path);
    return estimate_ber(std::span<const double>(lengths), format, phy);
}

}  // namespace qot
