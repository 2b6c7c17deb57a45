#pragma once

namespace qtrans {

// Unit system: energies in eV, lengths in nm, times in fs.
// Masses then carry eV*fs^2/nm^2 and momenta eV*fs/nm.

/// Free electron mass in eV*fs^2/nm^2 (0.511 MeV / c^2).
inline constexpr double kElectronMass = 5.685630;

struct PhysicalConstants {
    double hbar = 0.6582119569;            ///< eV*fs
    double m_star = 0.040 * kElectronMass; ///< effective mass, eV*fs^2/nm^2
    double e_charge = 1.0;                 ///< elementary charge, arbitrary current units

    /// Lead wavevector at kinetic energy E (eV) -> 1/nm.
    double wavevector(double energy_ev) const;
    /// Group velocity at kinetic energy E -> nm/fs.
    double velocity(double energy_ev) const;
    /// Momentum (eV*fs/nm) at kinetic energy E.
    double momentum(double energy_ev) const;

    void validate() const;
};

} // namespace qtrans
