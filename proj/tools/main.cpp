// Command-line front end.  Exit codes: 0 = success / positive verdict,
// 1 = negative verdict or property failure, 2 = input or usage error.

#include <iostream>

#include "CLI11.hpp"
#include "msplit/io.hpp"
#include "msplit/suite.hpp"

using namespace msplit;

namespace {

enum class Format { text, record };

struct Common {
  std::vector<std::string> space_files;
  std::string fn_file, mm_file;
  Format format = Format::text;

  Workspace load() const {
    Workspace ws;
    for (const auto& p : space_files) ws.load_space(p);
    return ws;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_fn = false, bool with_mm = false) {
  cmd->add_option("--space", c.space_files, "space file (repeatable)");
  if (with_fn) cmd->add_option("--fn", c.fn_file, "function file")->required();
  if (with_mm) cmd->add_option("--mm", c.mm_file, "multimap file")->required();
  cmd->add_option("--format", [&c](const std::vector<std::string>& v) {
        if (v[0] == "text") c.format = Format::text;
        else if (v[0] == "record") c.format = Format::record;
        else throw CLI::ValidationError("--format", "expected text|record");
        return true;
      },
      "output format: text|record");
}

void emit(Format f, const ojson& rec, const std::string& text) {
  if (f == Format::record) std::cout << rec.dump() << "\n";
  else std::cout << text << "\n";
}

std::string flag(bool b) { return b ? "true" : "false"; }

int run(int argc, char** argv) {
  CLI::App app{"exact decision procedures for multi-split continuity on finite spaces"};
  app.require_subcommand(1);

  Common c;
  int exit_code = 0;

  // validate
  auto* validate = app.add_subcommand("validate", "load and validate space files");
  add_common(validate, c);
  validate->callback([&] {
    Workspace ws;
    for (const auto& p : c.space_files) {
      FinSpace s = ws.load_space(p);
      ojson rec;
      rec["file"] = p;
      rec["name"] = s.name();
      rec["points"] = s.size();
      rec["valid"] = true;
      emit(c.format, rec, p + ": '" + s.name() + "' valid, " + std::to_string(s.size()) + " points");
    }
  });

  // closure
  auto* closure = app.add_subcommand("closure", "closure, interior and boundary of a point set");
  std::vector<std::string> set_labels;
  std::string space_name;
  add_common(closure, c);
  closure->add_option("--of", space_name, "space name")->required();
  closure->add_option("--set", set_labels, "point labels")->required();
  closure->callback([&] {
    Workspace ws = c.load();
    const FinSpace& s = ws.space(space_name);
    Mask m = 0;
    for (const auto& l : set_labels) m |= pt(s.index(l));
    auto r = closure_interior_boundary(s, PointSet(s, m));
    ojson rec;
    rec["space"] = s.name();
    rec["closure"] = r.cl.to_labels();
    rec["interior"] = r.in.to_labels();
    rec["boundary"] = r.bd.to_labels();
    emit(c.format, rec,
         "cl=" + ojson(r.cl.to_labels()).dump() + " int=" + ojson(r.in.to_labels()).dump() +
             " bd=" + ojson(r.bd.to_labels()).dump());
  });

  // separation
  auto* separation = app.add_subcommand("separation", "separation axioms of a space");
  add_common(separation, c);
  separation->add_option("--of", space_name, "space name")->required();
  separation->callback([&] {
    Workspace ws = c.load();
    SeparationFlags f = separation_flags(ws.space(space_name));
    ojson rec;
    rec["t0"] = f.t0;
    rec["hausdorff"] = f.hausdorff;
    rec["regular"] = f.regular;
    emit(c.format, rec,
         "t0=" + flag(f.t0) + " hausdorff=" + flag(f.hausdorff) + " regular=" + flag(f.regular));
  });

  // evsets
  auto* evsets = app.add_subcommand("evsets", "extended-value families of a function");
  std::string point;
  add_common(evsets, c, true);
  evsets->add_option("--point", point, "restrict to one point");
  evsets->callback([&] {
    Workspace ws = c.load();
    PointMap f = ws.load_map(c.fn_file);
    std::size_t lo = 0, hi = f.dom.size();
    if (!point.empty()) {
      lo = f.dom.index(point);
      hi = lo + 1;
    }
    for (std::size_t p = lo; p < hi; ++p) {
      ojson rec = ev_family_report(ev_family(f, p), f);
      emit(c.format, rec, rec.dump());
    }
  });

  // star
  auto* star_cmd = app.add_subcommand("star", "the star multifunction of a function");
  add_common(star_cmd, c, true);
  star_cmd->callback([&] {
    Workspace ws = c.load();
    PointMap f = ws.load_map(c.fn_file);
    MultiMap fs = star(f);
    ojson rec = multimap_to_json(fs, "star");
    emit(c.format, rec, rec.dump());
  });

  // msc
  auto* msc = app.add_subcommand("msc", "multi-split continuity with certificates");
  add_common(msc, c, true);
  msc->add_option("--point", point, "restrict to one point");
  msc->callback([&] {
    Workspace ws = c.load();
    PointMap f = ws.load_map(c.fn_file);
    MscResult r = point.empty() ? is_multi_split(f) : is_multi_split_at(f, f.dom.index(point));
    ojson rec;
    rec["multi_split"] = r.value;
    ojson certs = ojson::array();
    for (Mask m : r.certificates) certs.push_back(PointSet(f.cod, m).to_labels());
    rec["certificates"] = std::move(certs);
    emit(c.format, rec, rec.dump());
    if (!r.value) exit_code = 1;
  });

  // usc
  auto* usc = app.add_subcommand("usc", "upper semicontinuity of a multimap");
  add_common(usc, c, false, true);
  usc->add_option("--point", point, "restrict to one point");
  usc->callback([&] {
    Workspace ws = c.load();
    MultiMap f = ws.load_multimap(c.mm_file);
    CheckResult r = point.empty() ? is_usc(f) : is_usc_at(f, f.dom.index(point));
    ojson rec;
    rec["usc"] = r.value;
    if (r.witness) {
      rec["witness_point"] = f.dom.label(r.witness->point);
      rec["witness_open"] = PointSet(f.cod, r.witness->open).to_labels();
    }
    emit(c.format, rec, rec.dump());
    if (!r.value) exit_code = 1;
  });

  // usco
  auto* usco = app.add_subcommand("usco", "usco / minimal usco decision");
  bool minimal = false;
  add_common(usco, c, false, true);
  usco->add_flag("--minimal", minimal, "also decide minimality");
  usco->callback([&] {
    Workspace ws = c.load();
    MultiMap f = ws.load_multimap(c.mm_file);
    bool u = is_usco(f);
    ojson rec;
    rec["usco"] = u;
    if (minimal) rec["minimal"] = u && is_minimal_usco(f);
    emit(c.format, rec, rec.dump());
    if (!u || (minimal && !rec["minimal"].get<bool>())) exit_code = 1;
  });

  // prems
  auto* prems = app.add_subcommand("prems", "pre-multi-split decision for a multimap");
  add_common(prems, c, false, true);
  prems->callback([&] {
    Workspace ws = c.load();
    MultiMap f = ws.load_multimap(c.mm_file);
    PreMsReport r = is_pre_multi_split(f);
    ojson rec;
    rec["pre_multi_split"] = r.value;
    rec["selections"] = r.selections;
    rec["fp_certifies_all"] = r.fp_certifies_all;
    emit(c.format, rec, rec.dump());
    if (!r.value) exit_code = 1;
  });

  // graphclosure
  auto* graph = app.add_subcommand("graphclosure", "graph of a function or multimap, with closure");
  graph->add_option("--space", c.space_files, "space file (repeatable)");
  graph->add_option("--fn", c.fn_file, "function file");
  graph->add_option("--mm", c.mm_file, "multimap file");
  graph->add_option("--format", [&c](const std::vector<std::string>& v) {
        c.format = v[0] == "record" ? Format::record : Format::text;
        return true;
      },
      "output format: text|record");
  graph->callback([&] {
    Workspace ws = c.load();
    if (c.fn_file.empty() == c.mm_file.empty())
      fail(errc::parse_error, "graphclosure needs exactly one of --fn or --mm");
    GraphClosure gc = c.fn_file.empty() ? graph_and_closure(ws.load_multimap(c.mm_file))
                                        : graph_and_closure(ws.load_map(c.fn_file));
    ojson rec;
    rec["product"] = gc.prod.name();
    rec["graph"] = gc.graph.to_labels();
    rec["closure"] = gc.closed.to_labels();
    rec["closed"] = gc.graph.mask == gc.closed.mask;
    emit(c.format, rec, rec.dump());
  });

  // splithomeo
  auto* sh = app.add_subcommand("splithomeo", "split homeomorphism decision");
  add_common(sh, c, true);
  sh->callback([&] {
    Workspace ws = c.load();
    PointMap f = ws.load_map(c.fn_file);
    SplitHomeoResult r = is_split_homeo(f);
    ojson rec;
    rec["split_homeomorphism"] = r.value;
    rec["bijective"] = r.bijective;
    rec["forward_multi_split"] = r.forward_msc;
    rec["inverse_multi_split"] = r.inverse_msc;
    emit(c.format, rec, rec.dump());
    if (!r.value) exit_code = 1;
  });

  // reglue-build
  auto* rbuild = app.add_subcommand("reglue-build", "reglue datum of a split homeomorphism");
  std::string out_file;
  add_common(rbuild, c, true);
  rbuild->add_option("--out", out_file, "write the datum to this file");
  rbuild->callback([&] {
    Workspace ws = c.load();
    PointMap f = ws.load_map(c.fn_file);
    ReglueDatum d = reglue_from_splithomeo(f);
    ojson rec = reglue_to_json(d);
    if (!out_file.empty()) write_file(out_file, rec);
    else std::cout << rec.dump(2) << "\n";
  });

  // reglue-verify
  auto* rverify = app.add_subcommand("reglue-verify", "validation report for a reglue datum");
  std::string reglue_file;
  add_common(rverify, c);
  rverify->add_option("--reglue", reglue_file, "reglue file")->required();
  rverify->callback([&] {
    Workspace ws = c.load();
    ReglueDatum d = ws.load_reglue(reglue_file);
    ReglueReport r = validate_reglue(d);
    ojson rec;
    rec["x_discrete"] = r.x_discrete;
    rec["y_discrete"] = r.y_discrete;
    rec["pX_continuous"] = r.pX_continuous;
    rec["pY_continuous"] = r.pY_continuous;
    rec["pX_surjective"] = r.pX_surjective;
    rec["pY_surjective"] = r.pY_surjective;
    rec["fibers_finite"] = r.fibers_finite;
    rec["pX_quotient"] = r.pX_quotient;
    rec["pY_quotient"] = r.pY_quotient;
    rec["right_inverse"] = r.right_inverse;
    rec["f_bijective"] = r.f_bijective;
    rec["ok"] = r.ok();
    emit(c.format, rec, rec.dump());
    if (!r.ok()) exit_code = 1;
  });

  // reglue-compose
  auto* rcomp = app.add_subcommand("reglue-compose", "transitive composition of two reglue data");
  std::vector<std::string> reglue_files;
  add_common(rcomp, c);
  rcomp->add_option("--reglue", reglue_files, "two reglue files")->expected(2);
  rcomp->add_option("--out", out_file, "write the composite to this file");
  rcomp->callback([&] {
    Workspace ws = c.load();
    ReglueDatum d1 = ws.load_reglue(reglue_files.at(0));
    ReglueDatum d2 = ws.load_reglue(reglue_files.at(1));
    ReglueDatum comp = reglue_transitive(d1, d2);
    ojson rec = reglue_to_json(comp);
    if (!out_file.empty()) write_file(out_file, rec);
    else std::cout << rec.dump(2) << "\n";
  });

  // gallery
  auto* gal = app.add_subcommand("gallery", "exact-rational example verifications");
  std::string example;
  unsigned depth = 50;
  unsigned fw_n = 5;
  std::size_t circle_n = 10;
  std::string query;
  gal->add_option("example", example,
                  "one_over_n | quotient_line | comb_space | fweird | fweird-eval | circle")
      ->required();
  gal->add_option("--depth", depth, "verification depth");
  gal->add_option("--n", fw_n, "sequence index for fweird");
  gal->add_option("--samples", circle_n, "samples per segment for circle");
  gal->add_option("--q", query, "rational argument p/q for fweird-eval");
  gal->add_option("--format", [&c](const std::vector<std::string>& v) {
        c.format = v[0] == "record" ? Format::record : Format::text;
        return true;
      },
      "output format: text|record");
  gal->callback([&] {
    if (example == "fweird") {
      WitnessReport rep = f_weird_star_check(fw_n, depth);
      emit(c.format, witness_report_to_json(rep), witness_report_to_json(rep).dump());
      if (!rep.pass) exit_code = 1;
    } else if (example == "fweird-eval") {
      auto [x, y] = f_weird_eval(Rational::parse(query), depth);
      ojson rec;
      rec["value"] = ojson::array({x.str(), y.str()});
      emit(c.format, rec, "(" + x.str() + ", " + y.str() + ")");
    } else if (example == "circle") {
      CircleDemo demo = circle_reglue_demo(circle_n);
      ReglueReport r = validate_reglue(demo.datum);
      ojson rec;
      rec["Z_points"] = demo.datum.Z.size();
      rec["X_points"] = demo.x_points;
      rec["Y_points"] = demo.y_points;
      rec["valid"] = r.ok();
      rec["f_bijective"] = r.f_bijective;
      emit(c.format, rec, rec.dump());
      if (!r.ok()) exit_code = 1;
    } else {
      WitnessReport rep = divergence_witness(example, depth);
      emit(c.format, witness_report_to_json(rep), witness_report_to_json(rep).dump());
      if (!rep.pass) exit_code = 1;
    }
  });

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "run the registered theorem properties");
  std::string prop_name;
  SuiteOptions opt;
  suite_cmd->add_option("--property", prop_name, "run one property");
  suite_cmd->add_option("--trials", opt.trials, "random trials per property");
  suite_cmd->add_option("--seed", opt.seed, "random seed");
  suite_cmd->add_option("--exhaustive-max", opt.exhaustive_max,
                        "exhaustive sweep size (0 disables)");
  suite_cmd->add_option("--format", [&c](const std::vector<std::string>& v) {
        c.format = v[0] == "record" ? Format::record : Format::text;
        return true;
      },
      "output format: text|record");
  suite_cmd->add_flag("--list", "list registered properties");
  suite_cmd->callback([&] {
    if (suite_cmd->count("--list")) {
      for (const auto& n : property_names())
        std::cout << n << ": " << property_note(n) << "\n";
      return;
    }
    std::vector<PropertyResult> results;
    if (!prop_name.empty()) results.push_back(run_property(prop_name, opt));
    else results = run_all(opt);
    bool all_pass = true;
    for (const auto& r : results) {
      if (!r.pass()) all_pass = false;
      ojson rec;
      rec["property"] = r.name;
      rec["trials"] = r.trials;
      rec["skipped"] = r.skipped;
      rec["failures"] = r.failures.size();
      if (!r.failures.empty()) rec["first_failure"] = ojson::parse(r.failures.front());
      if (c.format == Format::record) {
        std::cout << rec.dump() << "\n";
      } else {
        std::cout << (r.pass() ? "pass " : "FAIL ") << r.name << "  trials=" << r.trials
                  << " skipped=" << r.skipped << " failures=" << r.failures.size() << "\n";
      }
    }
    if (!all_pass) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return exit_code;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
