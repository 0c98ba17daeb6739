#pragma once

#include <cmath>

namespace nlqam {

inline double db_from_linear(double x) { return 10.0 * std::log10(x); }
inline double linear_from_db(double db) { return std::pow(10.0, db / 10.0); }

// dBm is referenced to 1 mW.
inline double dbm_from_watt(double w) { return 10.0 * std::log10(w / 1e-3); }
inline double watt_from_dbm(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

}  // namespace nlqam
