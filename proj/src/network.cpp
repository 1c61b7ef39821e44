#include "rfharvest/network.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rfharvest {

namespace {

void check_element(const LumpedElement& e) {
    if (!std::isfinite(e.value) || e.value <= 0.0)
        throw std::invalid_argument("LumpedElement: value must be finite and > 0");
    if (e.q_factor && (!std::isfinite(*e.q_factor) || *e.q_factor <= 0.0))
        throw std::invalid_argument("LumpedElement: q_factor must be finite and > 0");
}

}  // namespace

LumpedElement series_capacitor(double farads, std::optional<double> q) {
    return {ElementKind::capacitor, farads, q, std::nullopt, Placement::series};
}
LumpedElement shunt_capacitor(double farads, std::optional<double> q) {
    return {ElementKind::capacitor, farads, q, std::nullopt, Placement::shunt};
}
LumpedElement series_inductor(double henries, std::optional<double> q) {
    return {ElementKind::inductor, henries, q, std::nullopt, Placement::series};
}
LumpedElement shunt_inductor(double henries, std::optional<double> q) {
    return {ElementKind::inductor, henries, q, std::nullopt, Placement::shunt};
}
LumpedElement series_resistor(double ohms) {
    return {ElementKind::resistor, ohms, std::nullopt, std::nullopt, Placement::series};
}

ComplexImpedance element_impedance(const LumpedElement& e, Frequency f) {
    check_element(e);
    const double w = f.omega();
    double reactance = 0.0;
    switch (e.kind) {
        case ElementKind::capacitor: reactance = -1.0 / (w * e.value); break;
        case ElementKind::inductor: reactance = w * e.value; break;
        case ElementKind::resistor: return {e.value, 0.0};
    }
    const double loss = e.q_factor ? std::abs(reactance) / *e.q_factor : 0.0;
    return {loss, reactance};
}

AbcdMatrix AbcdMatrix::operator*(const AbcdMatrix& rhs) const {
    return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
            c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

std::complex<double> AbcdMatrix::determinant() const { return a * d - b * c; }

AbcdMatrix element_abcd(const LumpedElement& e, Frequency f) {
    const std::complex<double> z = element_impedance(e, f).value();
    if (e.placement == Placement::series) return {1.0, z, 0.0, 1.0};
    if (std::abs(z) == 0.0) throw std::runtime_error("element_abcd: shunt element with zero impedance");
    return {1.0, 0.0, 1.0 / z, 1.0};
}

CascadeNetwork::CascadeNetwork(std::vector<LumpedElement> stages) : stages_(std::move(stages)) {
    if (stages_.empty()) throw std::invalid_argument("CascadeNetwork: stage list must not be empty");
    for (const auto& e : stages_) check_element(e);
}

AbcdMatrix CascadeNetwork::abcd(Frequency f) const {
    AbcdMatrix m;
    for (const auto& e : stages_) m = m * element_abcd(e, f);
    return m;
}

CascadeNetwork cascade(std::vector<LumpedElement> stages) { return CascadeNetwork(std::move(stages)); }

std::size_t TwoPortResponse::minimum_index() const {
    if (s11.empty()) throw std::runtime_error("TwoPortResponse: empty response");
    std::size_t best = 0;
    for (std::size_t i = 1; i < s11.size(); ++i)
        if (std::abs(s11[i]) < std::abs(s11[best])) best = i;
    return best;
}

TwoPortResponse s11_sweep(const CascadeNetwork& net, const TerminationFn& termination,
                          const std::vector<double>& grid_hz, ComplexImpedance z_ref) {
    if (grid_hz.empty()) throw std::invalid_argument("s11_sweep: frequency grid must not be empty");
    for (std::size_t i = 1; i < grid_hz.size(); ++i)
        if (!(grid_hz[i] > grid_hz[i - 1]))
            throw std::invalid_argument("s11_sweep: frequency grid must be strictly increasing");
    if (z_ref.resistance <= 0.0)
        throw std::invalid_argument("s11_sweep: reference resistance must be > 0");
    if (!termination) throw std::invalid_argument("s11_sweep: termination function required");

    TwoPortResponse out;
    out.frequency_hz = grid_hz;
    out.s11.reserve(grid_hz.size());
    out.input_impedance.reserve(grid_hz.size());
    const std::complex<double> zr = z_ref.value();
    for (double fh : grid_hz) {
        const Frequency f(fh);
        const AbcdMatrix m = net.abcd(f);
        const std::complex<double> zt = termination(f).value();
        // Work with the (numerator, denominator) pair of z_in = (A*Zt + B) / (C*Zt + D)
        // so open-ish terminations stay well defined.
        const std::complex<double> num = m.a * zt + m.b;
        const std::complex<double> den = m.c * zt + m.d;
        const std::complex<double> refl_den = num + zr * den;
        if (std::abs(refl_den) == 0.0)
            throw std::runtime_error("s11_sweep: singular transformation at " +
                                     std::to_string(fh) + " Hz");
        out.s11.push_back((num - zr * den) / refl_den);
        out.input_impedance.push_back(ComplexImpedance::from(num / den));
    }
    return out;
}

std::vector<double> linear_grid(double start_hz, double stop_hz, int points) {
    if (points < 2) throw std::invalid_argument("linear_grid: need at least 2 points");
    if (!(stop_hz > start_hz)) throw std::invalid_argument("linear_grid: stop must exceed start");
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        g[static_cast<std::size_t>(i)] = start_hz + (stop_hz - start_hz) * i / (points - 1);
    return g;
}

}  // namespace rfharvest
