// greenring command-line tool. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "greenring/greenring.h"

namespace {

struct RingDeleter {
  void operator()(gr_ring* p) const { gr_ring_free(p); }
};
struct ElementDeleter {
  void operator()(gr_element* p) const { gr_element_free(p); }
};
struct BasedDeleter {
  void operator()(gr_based* p) const { gr_based_free(p); }
};
using RingPtr = std::unique_ptr<gr_ring, RingDeleter>;
using ElementPtr = std::unique_ptr<gr_element, ElementDeleter>;
using BasedPtr = std::unique_ptr<gr_based, BasedDeleter>;

// Carries an exit code out of nested helpers.
struct Failure {
  int code;
  std::string message;
};

int exit_code(gr_status s) {
  switch (s) {
    case GR_ERR_PARSE:
    case GR_ERR_FORMAT:
    case GR_ERR_DOMAIN:
    case GR_ERR_ARGUMENT: return 2;
    default: return 1;
  }
}

void check(gr_status s) {
  if (s != GR_OK) throw Failure{exit_code(s), gr_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  gr_string_free(s);
  return out;
}

struct Options {
  std::string kind = "stable";
  bool kind_given = false;
  int n = 4;
  int m = 1;
  std::string input;
  std::string format = "text";
  double tol = 1e-9;
  std::string out;
};

const std::map<std::string, gr_kind> kKinds{
    {"radford", GR_RADFORD}, {"grothendieck", GR_GROTHENDIECK}, {"stable", GR_STABLE}, {"taft", GR_TAFT}};
const std::map<std::string, gr_format> kFormats{{"json", GR_JSON}, {"csv", GR_CSV}, {"text", GR_TEXT}};

RingPtr open_ring(const Options& o, const std::string& kind) {
  gr_ring* r = nullptr;
  check(gr_ring_create(kKinds.at(kind), o.n, o.m, &r));
  return RingPtr(r);
}

BasedPtr open_based(const Options& o) {
  gr_based* b = nullptr;
  if (!o.input.empty()) {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw Failure{2, "cannot read " + o.input};
    std::ostringstream text;
    text << in.rdbuf();
    check(gr_based_load_json(text.str().c_str(), &b));
  } else {
    RingPtr ring = open_ring(o, o.kind);
    check(gr_based_from_ring(ring.get(), &b));
  }
  return BasedPtr(b);
}

ElementPtr parse(const gr_ring* ring, const std::string& src) {
  gr_element* e = nullptr;
  check(gr_element_parse(ring, src.c_str(), &e));
  return ElementPtr(e);
}

std::string line(char* s) { return take(s) + "\n"; }

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Failure{2, "cannot write " + o.out};
  f << text;
}

void add_ring_options(CLI::App* cmd, Options& o, bool with_input) {
  cmd->add_option("--kind", o.kind, "radford, grothendieck, stable or taft")
      ->check(CLI::IsMember({"radford", "grothendieck", "stable", "taft"}))
      ->each([&o](const std::string&) { o.kind_given = true; });
  cmd->add_option("--n", o.n, "order of the grouplike generator")->check(CLI::PositiveNumber);
  cmd->add_option("--m", o.m, "Radford parameter m")->check(CLI::PositiveNumber);
  if (with_input) cmd->add_option("--input", o.input, "BasedRing JSON file");
  cmd->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--tol", o.tol, "numeric tolerance");
  cmd->add_option("--out", o.out, "write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green rings of Taft and Radford Hopf algebras"};
  app.require_subcommand(1);
  Options o;
  std::string lhs, rhs, expr, basis = "f", check_name, target;

  auto* ring = app.add_subcommand("ring", "basis and structure constants");
  add_ring_options(ring, o, true);
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  add_ring_options(mul, o, false);
  mul->add_option("lhs", lhs)->required();
  mul->add_option("rhs", rhs)->required();
  auto* gram = app.add_subcommand("gram", "Gram matrix of the unit-coefficient form");
  add_ring_options(gram, o, true);
  auto* radical = app.add_subcommand("radical", "left and right radicals of the form");
  add_ring_options(radical, o, true);
  auto* fp = app.add_subcommand("fpdim", "Frobenius-Perron dimensions");
  add_ring_options(fp, o, true);
  auto* verify = app.add_subcommand("verify", "check fusion, group-like or bi-Frobenius axioms");
  add_ring_options(verify, o, true);
  verify->add_option("structure", check_name)->required()->check(
      CLI::IsMember({"fusion", "group-like", "bifrobenius"}));
  auto* convert = app.add_subcommand("convert", "rewrite a stable element in the F or monomial basis");
  add_ring_options(convert, o, false);
  convert->add_option("expr", expr)->required();
  convert->add_option("--to", basis)->check(CLI::IsMember({"f", "monomial"}));
  auto* project = app.add_subcommand("project", "image of a Radford Green ring element");
  add_ring_options(project, o, false);
  project->add_option("target", target)->required()->check(CLI::IsMember({"stable", "grothendieck"}));
  project->add_option("expr", expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const gr_format fmt = kFormats.at(o.format);
  try {
    if (ring->parsed()) {
      BasedPtr b = open_based(o);
      char* s = nullptr;
      check(gr_based_render(b.get(), fmt, &s));
      emit(o, take(s));
    } else if (mul->parsed()) {
      RingPtr r = open_ring(o, o.kind);
      ElementPtr a = parse(r.get(), lhs), c = parse(r.get(), rhs);
      gr_element* p = nullptr;
      check(gr_element_mul(a.get(), c.get(), &p));
      ElementPtr prod(p);
      char* s = nullptr;
      check(gr_element_render(prod.get(), &s));
      emit(o, line(s));
    } else if (gram->parsed() || radical->parsed()) {
      BasedPtr b = open_based(o);
      char* s = nullptr;
      check(gram->parsed() ? gr_based_gram(b.get(), fmt, &s) : gr_based_radical(b.get(), fmt, &s));
      emit(o, take(s));
    } else if (fp->parsed()) {
      BasedPtr b = open_based(o);
      char* s = nullptr;
      check(gr_based_fpdim(b.get(), o.tol, fmt, &s));
      emit(o, take(s));
    } else if (verify->parsed()) {
      BasedPtr b = open_based(o);
      const gr_check c = check_name == "fusion"       ? GR_CHECK_FUSION
                         : check_name == "group-like" ? GR_CHECK_GROUPLIKE
                                                      : GR_CHECK_BIFROBENIUS;
      int passed = 0;
      char* s = nullptr;
      check(gr_based_verify(b.get(), c, o.tol, fmt, &passed, &s));
      emit(o, take(s));
      return passed ? 0 : 1;
    } else if (convert->parsed()) {
      RingPtr r = open_ring(o, "stable");
      ElementPtr e = parse(r.get(), expr);
      char* s = nullptr;
      check(gr_element_convert(e.get(), basis == "monomial" ? GR_BASIS_MONOMIAL : GR_BASIS_F, &s));
      emit(o, line(s));
    } else if (project->parsed()) {
      // The source is always a Radford Green ring; taft selects m = 1.
      const std::string kind = o.kind_given ? o.kind : "radford";
      if (kind != "radford" && kind != "taft") throw Failure{2, "project needs --kind radford or taft"};
      RingPtr r = open_ring(o, kind);
      ElementPtr e = parse(r.get(), expr);
      gr_element* p = nullptr;
      check(gr_element_project(e.get(), target == "grothendieck" ? GR_PROJECT_GROTHENDIECK : GR_PROJECT_STABLE, &p));
      ElementPtr img(p);
      char* s = nullptr;
      check(gr_element_render(img.get(), &s));
      emit(o, line(s));
    }
  } catch (const Failure& f) {
    std::cerr << "greenring: " << f.message << "\n";
    return f.code;
  }
  return 0;
}
