// Labels, flag parsing and number formatting shared by the CLI and tests.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "shootout/core.hpp"

namespace shootout {

using rational = boost::multiprecision::cpp_rational;

inline double to_double(const rational& v) { return v.convert_to<double>(); }

// "2/3", "0.75", "1"
rational parse_probability(const std::string& text);

// Half-up fixed-point rendering, e.g. format_fixed(4/7, 3) == "0.571".
std::string format_fixed(const rational& v, int digits);

// %.{digits}g with the C locale (dot decimal separator).
std::string format_sig(double v, int digits);

const char* mechanism_label(MechanismId mech);
const char* model_label(PressureModelId model);

std::optional<MechanismId> parse_mechanism(std::string_view text);
std::optional<PressureModelId> parse_model(std::string_view text);

}  // namespace shootout
