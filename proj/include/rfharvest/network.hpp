#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "rfharvest/units.hpp"

namespace rfharvest {

enum class ElementKind { capacitor, inductor, resistor };
enum class Placement { series, shunt };

/// Two-terminal lumped element. A finite q_factor adds a series loss
/// resistance |X|/Q evaluated at the analysis frequency; q_ref_frequency
/// records where the datasheet quotes that Q (informational).
struct LumpedElement {
    ElementKind kind = ElementKind::capacitor;
    double value = 0.0;  // farads, henries or ohms
    std::optional<double> q_factor;
    std::optional<double> q_ref_frequency_hz;
    Placement placement = Placement::series;
};

LumpedElement series_capacitor(double farads, std::optional<double> q = std::nullopt);
LumpedElement shunt_capacitor(double farads, std::optional<double> q = std::nullopt);
LumpedElement series_inductor(double henries, std::optional<double> q = std::nullopt);
LumpedElement shunt_inductor(double henries, std::optional<double> q = std::nullopt);
LumpedElement series_resistor(double ohms);

/// Impedance of one element at f, including the Q-derived series loss term.
ComplexImpedance element_impedance(const LumpedElement& e, Frequency f);

/// ABCD (chain) matrix of a reciprocal two-port.
struct AbcdMatrix {
    std::complex<double> a{1.0, 0.0};
    std::complex<double> b{0.0, 0.0};
    std::complex<double> c{0.0, 0.0};
    std::complex<double> d{1.0, 0.0};

    AbcdMatrix operator*(const AbcdMatrix& rhs) const;
    [[nodiscard]] std::complex<double> determinant() const;
};

AbcdMatrix element_abcd(const LumpedElement& e, Frequency f);

/// Ordered cascade of lumped elements, source side first.
class CascadeNetwork {
public:
    explicit CascadeNetwork(std::vector<LumpedElement> stages);

    [[nodiscard]] AbcdMatrix abcd(Frequency f) const;
    [[nodiscard]] const std::vector<LumpedElement>& stages() const { return stages_; }

private:
    std::vector<LumpedElement> stages_;
};

CascadeNetwork cascade(std::vector<LumpedElement> stages);

using TerminationFn = std::function<ComplexImpedance(Frequency)>;

/// Swept one-port response of a terminated cascade.
struct TwoPortResponse {
    std::vector<double> frequency_hz;
    std::vector<std::complex<double>> s11;
    std::vector<ComplexImpedance> input_impedance;

    /// Index of the |s11| minimum.
    [[nodiscard]] std::size_t minimum_index() const;
};

/// S11 of `net` terminated by `termination`, referenced to z_ref, over an
/// explicit strictly increasing frequency grid.
TwoPortResponse s11_sweep(const CascadeNetwork& net, const TerminationFn& termination,
                          const std::vector<double>& grid_hz,
                          ComplexImpedance z_ref = {50.0, 0.0});

/// Helper: uniform inclusive grid with `points` >= 2 entries.
std::vector<double> linear_grid(double start_hz, double stop_hz, int points);

}  // namespace rfharvest
