#include "shootout/text.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace shootout {

using boost::multiprecision::cpp_int;

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

cpp_int pow10(int k) {
  cpp_int v = 1;
  for (int i = 0; i < k; ++i) v *= 10;
  return v;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

rational parse_probability(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("not a probability literal: '" + text + "'");
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    const cpp_int d(den);
    if (d == 0) throw bad();
    return rational(cpp_int(num), d);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    if (!all_digits(text)) throw bad();
    return rational(cpp_int(text));
  }
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (!all_digits(whole) && !whole.empty()) throw bad();
  if (!all_digits(frac)) throw bad();
  rational v(whole.empty() ? cpp_int(0) : cpp_int(whole));
  v += rational(cpp_int(frac), pow10(static_cast<int>(frac.size())));
  return v;
}

std::string format_fixed(const rational& v, int digits) {
  const cpp_int scale = pow10(digits);
  rational scaled = v * scale + rational(1, 2);
  cpp_int units = numerator(scaled) / denominator(scaled);  // floor for v >= -1/2
  const bool neg = units < 0;
  if (neg) units = -units;
  const cpp_int whole = units / scale;
  const cpp_int frac = units % scale;
  std::string out = neg ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

const char* mechanism_label(MechanismId mech) {
  switch (mech) {
    case MechanismId::Standard: return "ABAB";
    case MechanismId::Alternating: return "ABBA";
    case MechanismId::DoubleAlternating: return "ABBA|BAAB";
    case MechanismId::CatchUp: return "Catch-up";
    case MechanismId::AdjCatchUp: return "Adjusted Catch-up";
    case MechanismId::BehindFirst: return "Behind-first";
    case MechanismId::AdjBehindFirst: return "Adjusted Behind-first";
  }
  return "?";
}

const char* model_label(PressureModelId model) {
  switch (model) {
    case PressureModelId::M1: return "M1";
    case PressureModelId::M2: return "M2";
    case PressureModelId::M3: return "M3";
  }
  return "?";
}

std::optional<MechanismId> parse_mechanism(std::string_view text) {
  const std::string t = lower(text);
  if (t == "standard" || t == "abab") return MechanismId::Standard;
  if (t == "alternating" || t == "abba") return MechanismId::Alternating;
  if (t == "double-alternating" || t == "abba|baab" || t == "abbabaab")
    return MechanismId::DoubleAlternating;
  if (t == "catch-up" || t == "catchup") return MechanismId::CatchUp;
  if (t == "adjusted-catch-up" || t == "adj-catch-up" || t == "adjcatchup")
    return MechanismId::AdjCatchUp;
  if (t == "behind-first" || t == "behindfirst") return MechanismId::BehindFirst;
  if (t == "adjusted-behind-first" || t == "adj-behind-first" ||
      t == "adjbehindfirst")
    return MechanismId::AdjBehindFirst;
  return std::nullopt;
}

std::optional<PressureModelId> parse_model(std::string_view text) {
  const std::string t = lower(text);
  if (t == "m1") return PressureModelId::M1;
  if (t == "m2") return PressureModelId::M2;
  if (t == "m3") return PressureModelId::M3;
  return std::nullopt;
}

}  // namespace shootout
