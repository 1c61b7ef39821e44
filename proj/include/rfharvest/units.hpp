#pragma once

#include <complex>

namespace rfharvest {

inline constexpr double k_speed_of_light = 299792458.0;  // m/s

/// RF power referenced to 1 mW. Stored in dBm, convertible to watts.
class PowerLevel {
public:
    PowerLevel() = default;
    explicit PowerLevel(double dbm);
    static PowerLevel from_watts(double watts);

    [[nodiscard]] double dbm() const { return dbm_; }
    [[nodiscard]] double watts() const;

private:
    double dbm_ = 0.0;
};

/// Strictly positive frequency in hertz.
class Frequency {
public:
    explicit Frequency(double hertz);

    [[nodiscard]] double hertz() const { return hertz_; }
    [[nodiscard]] double omega() const;       // 2*pi*f, rad/s
    [[nodiscard]] double wavelength() const;  // m, free space

private:
    double hertz_;
};

/// One-port impedance; resistance and reactance in ohms.
struct ComplexImpedance {
    double resistance = 0.0;
    double reactance = 0.0;

    [[nodiscard]] std::complex<double> value() const { return {resistance, reactance}; }
    static ComplexImpedance from(std::complex<double> z) { return {z.real(), z.imag()}; }
};

double dbm_to_watts(PowerLevel p);
PowerLevel watts_to_dbm(double watts);

/// Voltage reflection coefficient of z_load against reference z_ref,
/// gamma = (Zl - Zr) / (Zl + Zr). Throws if the denominator vanishes.
std::complex<double> reflection_coefficient(ComplexImpedance z_load, ComplexImpedance z_ref);

/// |gamma| expressed in dB (<= 0 for passive loads).
double magnitude_db(std::complex<double> gamma);

}  // namespace rfharvest
