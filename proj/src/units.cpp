#include "rfharvest/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rfharvest {

PowerLevel::PowerLevel(double dbm) : dbm_(dbm) {
    if (!std::isfinite(dbm)) throw std::invalid_argument("PowerLevel: dBm value must be finite");
}

PowerLevel PowerLevel::from_watts(double watts) {
    if (!std::isfinite(watts) || watts <= 0.0)
        throw std::invalid_argument("PowerLevel: watts must be finite and > 0");
    return PowerLevel(10.0 * std::log10(watts / 1e-3));
}

double PowerLevel::watts() const { return 1e-3 * std::pow(10.0, dbm_ / 10.0); }

Frequency::Frequency(double hertz) : hertz_(hertz) {
    if (!std::isfinite(hertz) || hertz <= 0.0)
        throw std::invalid_argument("Frequency: hertz must be finite and > 0");
}

double Frequency::omega() const { return 2.0 * std::numbers::pi * hertz_; }

double Frequency::wavelength() const { return k_speed_of_light / hertz_; }

double dbm_to_watts(PowerLevel p) { return p.watts(); }

PowerLevel watts_to_dbm(double watts) { return PowerLevel::from_watts(watts); }

std::complex<double> reflection_coefficient(ComplexImpedance z_load, ComplexImpedance z_ref) {
    if (!std::isfinite(z_load.resistance) || !std::isfinite(z_load.reactance) ||
        !std::isfinite(z_ref.resistance) || !std::isfinite(z_ref.reactance))
        throw std::invalid_argument("reflection_coefficient: impedances must be finite");
    if (z_ref.resistance <= 0.0)
        throw std::invalid_argument("reflection_coefficient: reference resistance must be > 0");
    const std::complex<double> zl = z_load.value();
    const std::complex<double> zr = z_ref.value();
    const std::complex<double> den = zl + zr;
    if (std::abs(den) == 0.0)
        throw std::runtime_error("reflection_coefficient: z_load + z_ref is singular");
    return (zl - zr) / den;
}

double magnitude_db(std::complex<double> gamma) { return 20.0 * std::log10(std::abs(gamma)); }

}  // namespace rfharvest
