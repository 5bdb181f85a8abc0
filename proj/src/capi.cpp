#include "greenring/greenring.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "greenring/bifrob.hpp"
#include "greenring/expr.hpp"
#include "greenring/io.hpp"
#include "greenring/parallel.hpp"

using namespace greenring;

struct gr_ring {
  RingSpecPtr spec;
};

struct gr_element {
  RingElement value;
};

struct gr_based {
  BasedRing ring;
  std::string title;
  std::optional<int> stable_n;
};

namespace {

thread_local std::string last_error;

gr_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::Domain: return GR_ERR_DOMAIN;
    case ErrorCode::Context: return GR_ERR_CONTEXT;
    case ErrorCode::Parse: return GR_ERR_PARSE;
    case ErrorCode::Integrality: return GR_ERR_INTEGRALITY;
    case ErrorCode::Precondition: return GR_ERR_PRECONDITION;
    case ErrorCode::Numeric: return GR_ERR_NUMERIC;
    case ErrorCode::Presentation: return GR_ERR_PRESENTATION;
    case ErrorCode::Format: return GR_ERR_FORMAT;
    case ErrorCode::Unsupported: return GR_ERR_UNSUPPORTED;
  }
  return GR_ERR_INTERNAL;
}

template <class F>
gr_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return GR_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GR_ERR_INTERNAL;
  }
}

gr_status bad_argument(const char* what) {
  last_error = what;
  return GR_ERR_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Format to_format(gr_format f) {
  switch (f) {
    case GR_CSV: return Format::Csv;
    case GR_TEXT: return Format::Text;
    default: return Format::Json;
  }
}

// Attaches the detected duality when there is one.
BasedRing with_detected_involution(const BasedRing& r) {
  if (r.involution()) return r;
  try {
    return r.with_involution(detect_involution(r));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Precondition) throw;
    return r;
  }
}

void append(VerificationReport& into, const VerificationReport& from) {
  into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end());
}

VerificationReport verify(const gr_based& b, gr_check check, double tol) {
  static const char* const subjects[] = {"fusion", "group-like", "bi-frobenius"};
  VerificationReport rep = fusion_verify(b.ring);
  rep.subject = subjects[check];
  if (check == GR_CHECK_FUSION) return rep;
  try {
    const BasedRing r = with_detected_involution(b.ring);
    const GroupLikeData g = grouplike_build(r, fpdim(r, tol), tol);
    append(rep, grouplike_verify(g, tol));
    if (check == GR_CHECK_BIFROBENIUS) append(rep, bifrob_verify(bifrob_build(g, b.stable_n), tol));
  } catch (const Error& e) {
    rep.checks.push_back({"construction", true, false, 1.0, {e.what()}});
  }
  return rep;
}

}  // namespace

extern "C" {

const char* gr_last_error(void) { return last_error.c_str(); }

void gr_string_free(char* s) { std::free(s); }

void gr_set_threads(unsigned count) { set_thread_count(count); }

gr_status gr_ring_create(gr_kind kind, int n, int m, gr_ring** out) {
  if (!out) return bad_argument("null output pointer");
  return guard([&] {
    RingKind k = RingKind::Stable;
    switch (kind) {
      case GR_RADFORD: k = RingKind::RadfordGreen; break;
      case GR_GROTHENDIECK: k = RingKind::Grothendieck; break;
      case GR_STABLE: k = RingKind::Stable; m = 1; break;
      case GR_TAFT:
        if (m != 1) throw Error(ErrorCode::Domain, "Taft rings have m = 1");
        k = RingKind::RadfordGreen;
        break;
      default: throw Error(ErrorCode::Domain, "unknown ring kind");
    }
    *out = new gr_ring{make_ring(k, n, m)};
  });
}

void gr_ring_free(gr_ring* ring) { delete ring; }

size_t gr_ring_rank(const gr_ring* ring) { return ring ? ring->spec->rank() : 0; }

gr_status gr_ring_describe(const gr_ring* ring, char** out) {
  if (!ring || !out) return bad_argument("null argument");
  return guard([&] { *out = dup(ring->spec->describe()); });
}

gr_status gr_element_parse(const gr_ring* ring, const char* src, gr_element** out) {
  if (!ring || !src || !out) return bad_argument("null argument");
  return guard([&] { *out = new gr_element{parse_element(src, ring->spec)}; });
}

gr_status gr_element_mul(const gr_element* a, const gr_element* b, gr_element** out) {
  if (!a || !b || !out) return bad_argument("null argument");
  return guard([&] { *out = new gr_element{ring_mul(a->value, b->value)}; });
}

gr_status gr_element_render(const gr_element* e, char** out) {
  if (!e || !out) return bad_argument("null argument");
  return guard([&] { *out = dup(e->value.to_string()); });
}

gr_status gr_element_convert(const gr_element* e, gr_basis basis, char** out) {
  if (!e || !out) return bad_argument("null argument");
  return guard([&] {
    const auto& spec = e->value.spec();
    if (spec->kind() != RingKind::Stable) throw Error(ErrorCode::Context, "basis conversion needs a stable ring");
    if (basis == GR_BASIS_MONOMIAL) {
      *out = dup(render_monomial_coords(spec->n(), to_monomial_basis(e->value)));
    } else {
      *out = dup(e->value.to_string());
    }
  });
}

gr_status gr_element_project(const gr_element* e, gr_projection target, gr_element** out) {
  if (!e || !out) return bad_argument("null argument");
  return guard([&] {
    const auto& spec = e->value.spec();
    const PresentedHom h = target == GR_PROJECT_GROTHENDIECK ? grothendieck_projection(spec) : stable_projection(spec);
    *out = new gr_element{h.apply(e->value)};
  });
}

void gr_element_free(gr_element* e) { delete e; }

gr_status gr_based_from_ring(const gr_ring* ring, gr_based** out) {
  if (!ring || !out) return bad_argument("null argument");
  return guard([&] {
    const auto& spec = ring->spec;
    std::optional<int> stable_n;
    if (spec->kind() == RingKind::Stable) stable_n = spec->n();
    *out = new gr_based{with_detected_involution(based_from_presented(spec)), spec->describe(), stable_n};
  });
}

gr_status gr_based_load_json(const char* text, gr_based** out) {
  if (!text || !out) return bad_argument("null argument");
  return guard([&] { *out = new gr_based{based_from_json(text), "input", std::nullopt}; });
}

void gr_based_free(gr_based* b) { delete b; }

size_t gr_based_rank(const gr_based* b) { return b ? b->ring.rank() : 0; }

gr_status gr_based_render(const gr_based* b, gr_format format, char** out) {
  if (!b || !out) return bad_argument("null argument");
  return guard([&] { *out = dup(render_ring(b->ring, to_format(format), b->title)); });
}

gr_status gr_based_gram(const gr_based* b, gr_format format, char** out) {
  if (!b || !out) return bad_argument("null argument");
  return guard([&] { *out = dup(render_gram(b->ring, gram_and_radicals(b->ring), to_format(format))); });
}

gr_status gr_based_radical(const gr_based* b, gr_format format, char** out) {
  if (!b || !out) return bad_argument("null argument");
  return guard([&] { *out = dup(render_radical(b->ring, gram_and_radicals(b->ring), to_format(format))); });
}

gr_status gr_based_fpdim(const gr_based* b, double tol, gr_format format, char** out) {
  if (!b || !out) return bad_argument("null argument");
  return guard([&] { *out = dup(render_fpdim(b->ring, fpdim(b->ring, tol), to_format(format))); });
}

gr_status gr_based_verify(const gr_based* b, gr_check check, double tol, gr_format format, int* passed, char** out) {
  if (!b || !out || !passed) return bad_argument("null argument");
  if (check < GR_CHECK_FUSION || check > GR_CHECK_BIFROBENIUS) return bad_argument("unknown check");
  return guard([&] {
    const VerificationReport rep = verify(*b, check, tol);
    *out = dup(render_report(rep, b->title, tol, to_format(format)));
    *passed = rep.passed() ? 1 : 0;
  });
}

}  // extern "C"
