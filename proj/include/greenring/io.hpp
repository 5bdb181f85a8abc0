#pragma once

// Serialization of based rings and rendering of computation reports.
// JSON field order is fixed; floats carry 12 significant digits.

#include <string>
#include <string_view>
#include <vector>

#include "greenring/based.hpp"
#include "greenring/bifrob.hpp"

namespace greenring {

enum class Format { Json, Csv, Text };

inline constexpr int kBasedRingFormatVersion = 1;

std::string based_to_json(const BasedRing& r);
// Structural checks only; call validate() for the ring axioms.
BasedRing based_from_json(std::string_view text);

std::string render_ring(const BasedRing& r, Format f, const std::string& title);
std::string render_gram(const BasedRing& r, const FormReport& rep, Format f);
std::string render_radical(const BasedRing& r, const FormReport& rep, Format f);
std::string render_fpdim(const BasedRing& r, const std::vector<double>& dims, Format f);
std::string render_report(const VerificationReport& rep, const std::string& ring, double tol, Format f);

// "%.12g"
std::string format_double(double v);

}  // namespace greenring
