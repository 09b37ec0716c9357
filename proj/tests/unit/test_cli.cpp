#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "tms/cli.hpp"
#include "tms/expr.hpp"
#include "tms/report_io.hpp"

using namespace tms;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return "/tmp/tms_unit_" + name; }

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("expression parsing") {
  using E = PropertyExpr;
  const int outer = static_cast<int>(Property::kOuter);
  const int inner = static_cast<int>(Property::kInner);
  const int strong = static_cast<int>(Property::kStrong);
  const int wl = static_cast<int>(Property::kWeakLusin);
  CHECK(parse_property_expr("outer & !inner") == E::conj(E::ident(outer), E::negate(E::ident(inner))));
  CHECK(parse_property_expr("strong -> weak_lusin") == E::implies(E::ident(strong), E::ident(wl)));
  CHECK(parse_property_expr("outer -> inner -> strong") ==
        E::implies(E::ident(outer), E::implies(E::ident(inner), E::ident(strong))));
  CHECK(parse_property_expr("outer | inner & strong") ==
        E::disj(E::ident(outer), E::conj(E::ident(inner), E::ident(strong))));
  CHECK(parse_property_expr("(outer | inner) & strong") ==
        E::conj(E::disj(E::ident(outer), E::ident(inner)), E::ident(strong)));
  CHECK(parse_property_expr("!!outer") == E::negate(E::negate(E::ident(outer))));
}

TEST_CASE("expression errors") {
  try {
    parse_property_expr("outre & inner");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::kExprUnknownIdent);
    CHECK(std::string(e.what()).find("outre") != std::string::npos);
  }
  for (const char* bad : {"", "outer &", "(outer", "outer inner", "outer - inner", "& outer", "outer)"}) {
    try {
      parse_property_expr(bad);
      FAIL("expected an error for ", bad);
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::kExprSyntax);
    }
  }
}

TEST_CASE("expression printing round-trips") {
  for (const char* text : {"outer & !inner", "strong -> weak_lusin", "(outer -> inner) -> strong", "!(outer | inner)",
                           "outer | inner & strong", "(outer | inner) & !(strong -> normal)"}) {
    const PropertyExpr e = parse_property_expr(text);
    CHECK(parse_property_expr(to_string(e)) == e);
  }
  CHECK(to_string(parse_property_expr("((outer)) & (!inner)")) == "outer & !inner");
}

TEST_CASE("expression evaluation") {
  CHECK(eval_expr(parse_property_expr("outer & !inner"), evaluate_report(fx::builtin("M_REP"))));
  CHECK_FALSE(eval_expr(parse_property_expr("!borel_regular"), evaluate_report(fx::builtin("M_CONST"))));
  for (const auto& ex : builtin_examples()) {
    CHECK(eval_expr(parse_property_expr("strong -> weak_lusin"), evaluate_report(ex.space)));
  }
}

TEST_CASE("report records") {
  const Space& dirac = fx::builtin("M_DIRAC");
  const ReportRecord r = make_record(dirac);
  std::ostringstream js;
  write_report(std::span<const ReportRecord>(&r, 1), ReportFormat::kJsonl, js);
  const std::string line = js.str();
  CHECK(std::count(line.begin(), line.end(), '\n') == 1);
  CHECK(line.back() == '\n');
  const ReportRecord back = record_from_json_line(line.substr(0, line.size() - 1));
  CHECK(back.model == r.model);
  CHECK(back.properties == r.properties);
  CHECK(line.find("\"C\":[\"a\"]") != std::string::npos);

  std::ostringstream human;
  write_report(std::span<const ReportRecord>(&r, 1), ReportFormat::kHuman, human);
  CHECK(human.str().find("strong_lusin=true") != std::string::npos);

  std::ostringstream none;
  write_report(std::span<const ReportRecord>(), ReportFormat::kJsonl, none);
  CHECK(none.str().empty());

  const Space& rep = fx::builtin("M_REP");
  std::ostringstream vals;
  const ReportRecord rr = make_record(rep);
  write_report(std::span<const ReportRecord>(&rr, 1), ReportFormat::kJsonl, vals);
  CHECK(vals.str().find("\"inf\"") != std::string::npos);
  CHECK_THROWS_AS(record_from_json_line("{not json"), ParseError);
}

TEST_CASE("report writer signals sink failures") {
  const ReportRecord r = make_record(fx::builtin("M_DIRAC"));
  std::ostringstream sink;
  sink.setstate(std::ios::badbit);
  try {
    write_report(std::span<const ReportRecord>(&r, 1), ReportFormat::kJsonl, sink);
    FAIL("expected E_IO");
  } catch (const ModelError& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
}

TEST_CASE("search dump round-trips at three points") {
  const Run r = run({"search", "--n", "3", "--sigma", "all", "--where", "outer | !outer"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const ReportRecord rec = record_from_json_line(line);
    const Space s = parse_model(rec.model);
    CHECK(evaluate_report(s).booleans() == rec.properties);
  }
  CHECK(lines == 894);
}

TEST_CASE("cli check") {
  const std::string path = temp_path("m_rep.tms");
  write_file(path, fx::builtin_examples_source("M_REP"));
  const Run r = run({"check", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("outer=true") != std::string::npos);
  CHECK(r.out.find("inner=false") != std::string::npos);
  CHECK(r.out.find("borel_reps=false") != std::string::npos);
  const Run o = run({"check", path, "--oracle", "--format", "jsonl"});
  CHECK(o.code == 0);
  CHECK(o.err.empty());
  CHECK(o.out.find("\"outer\":true") != std::string::npos);

  write_file(temp_path("bad.tms"), "points a b c\nopen {a}\nopen {b}\nsigma powerset\n");
  const Run bad = run({"check", temp_path("bad.tms")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("E_TOP") != std::string::npos);
  CHECK(bad.out.empty());
  CHECK(run({"check", temp_path("does_not_exist.tms")}).code == 2);
  std::remove(path.c_str());
  std::remove(temp_path("bad.tms").c_str());
}

TEST_CASE("cli examples") {
  const Run r = run({"examples", "--assert"});
  CHECK(r.code == 0);
  CHECK(r.out.find("M_DIRAC") != std::string::npos);
  const Run j = run({"examples", "--format", "jsonl"});
  CHECK(std::count(j.out.begin(), j.out.end(), '\n') == 5);
}

TEST_CASE("cli theorems") {
  const Run r = run({"theorems", "--n", "3", "--values", "0,1,inf", "--sigma", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations: 0") != std::string::npos);
  const Run j = run({"theorems", "--n", "2", "--format", "jsonl", "--jobs", "2"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"violations\":0") != std::string::npos);
  CHECK(run({"theorems", "--n", "6"}).code == 2);
}

TEST_CASE("cli search") {
  const Run none = run({"search", "--n", "3", "--where", "inner & !outer"});
  CHECK(none.code == 0);
  CHECK(none.out.empty());
  const Run some = run({"search", "--n", "3", "--where", "outer & !inner", "--limit", "2"});
  CHECK(some.code == 0);
  CHECK(std::count(some.out.begin(), some.out.end(), '\n') == 2);
  const Run again = run({"search", "--n", "3", "--where", "outer & !inner", "--limit", "2", "--jobs", "3"});
  CHECK(again.out == some.out);
  const std::string out = temp_path("search.jsonl");
  CHECK(run({"search", "--n", "3", "--where", "outer & !inner", "--out", out}).code == 0);
  std::ifstream f(out);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK_FALSE(buf.str().empty());
  std::remove(out.c_str());
  const Run bad = run({"search", "--n", "3", "--where", "outre"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("outre") != std::string::npos);
  CHECK(run({"search", "--n", "3", "--where", "outer", "--values", "0,x"}).code == 2);
}

TEST_CASE("cli enumerate and usage") {
  const Run r = run({"enumerate", "--n", "3", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "29\n");
  CHECK(run({"enumerate", "--n", "4", "--count-only", "--unlabeled"}).out == "33\n");
  const Run list = run({"enumerate", "--n", "2"});
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 4);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
