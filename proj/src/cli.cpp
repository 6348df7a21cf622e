#include "dio/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dio/json_io.hpp"
#include "dio/lattice_set.hpp"
#include "dio/oracle.hpp"
#include "dio/parse.hpp"
#include "dio/solve3.hpp"
#include "dio/system.hpp"

namespace dio::cli {

namespace {

struct CommandOptions {
  std::vector<std::string> equations;  // 1, or 2 with --system
  bool system = false;
  std::string box_spec;
  std::string ball_spec;
  bool positive = false;
  bool triangle = false;
  bool json_output = false;
  bool oracle = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Interval parse_interval(const std::string& spec) {
  std::istringstream is(spec);
  Int lo, hi;
  char colon;
  if (!(is >> lo >> colon) || colon != ':' || !(is >> hi) || !is.eof() || lo > hi)
    throw UsageError("bad interval '" + spec + "'");
  return {lo, hi};
}

std::array<Interval, 3> parse_box(const std::string& spec) {
  std::array<std::optional<Interval>, 3> axes;
  std::istringstream is(spec);
  std::string part;
  while (std::getline(is, part, ',')) {
    if (part.size() < 2 || part[1] != ':')
      throw UsageError("bad box component '" + part + "'");
    int axis = part[0] == 'x' ? 0 : part[0] == 'y' ? 1 : part[0] == 'z' ? 2 : -1;
    if (axis < 0) throw UsageError("bad box axis '" + part + "'");
    axes[axis] = parse_interval(part.substr(2));
  }
  if (!axes[0] || !axes[1] || !axes[2])
    throw UsageError("--box must give all of x, y and z");
  return {*axes[0], *axes[1], *axes[2]};
}

Ball parse_ball(const std::string& spec) {
  std::istringstream is(spec);
  Ball ball;
  char c1, c2, c3;
  Int radius;
  if (!(is >> ball.center[0] >> c1 >> ball.center[1] >> c2 >> ball.center[2] >>
        c3 >> radius) ||
      c1 != ',' || c2 != ',' || c3 != ':' || !is.eof() || radius < 0)
    throw UsageError("bad ball '" + spec + "' (expected CX,CY,CZ:R)");
  ball.radius_squared = checked_mul(radius, radius);
  return ball;
}

Region build_region(const CommandOptions& opt, bool box_required) {
  Region region;
  if (!opt.box_spec.empty()) {
    region.box = parse_box(opt.box_spec);
  } else if (box_required) {
    throw UsageError("--box is required for this command");
  } else {
    region.box = {Interval{-20, 20}, Interval{-20, 20}, Interval{-20, 20}};
  }
  if (!opt.ball_spec.empty()) region.ball = parse_ball(opt.ball_spec);
  if (opt.positive && opt.triangle) {
    auto pos = positive_predicate();
    auto tri = triangle_predicate();
    region.predicate = [pos, tri](const Vec3& p) { return pos(p) && tri(p); };
  } else if (opt.positive) {
    region.predicate = positive_predicate();
  } else if (opt.triangle) {
    region.predicate = triangle_predicate();
  }
  return region;
}

struct Solved {
  std::vector<Equation3> equations;
  SolutionSet3 set;
  std::string tag;
};

Solved solve_input(const CommandOptions& opt) {
  Solved result;
  for (const std::string& text : opt.equations)
    result.equations.push_back(parse_equation(text).equation());
  if (opt.system) {
    auto [set, tag] = solve_system({result.equations[0], result.equations[1]});
    result.set = std::move(set);
    result.tag = to_string(tag);
  } else {
    auto [set, tag] = solve3(result.equations[0]);
    result.set = std::move(set);
    result.tag = std::string(to_string(tag));
  }
  return result;
}

std::string point_str(const Vec3& p) {
  std::ostringstream os;
  os << '(' << p[0] << ", " << p[1] << ", " << p[2] << ')';
  return os.str();
}

void print_set_text(const Solved& s, std::ostream& out) {
  if (!s.set.solvable) {
    out << "no integer solutions (" << s.set.reason.divisor
        << " does not divide " << s.set.reason.target << ")\n";
    out << "case: " << s.tag << '\n';
    return;
  }
  out << "case: " << s.tag << '\n';
  out << "base: " << point_str(s.set.base) << '\n';
  out << "generators:";
  if (s.set.generators.empty()) out << " none";
  for (std::size_t i = 0; i < s.set.generators.size(); ++i)
    out << (i ? ", " : " ") << point_str(s.set.generators[i]);
  out << '\n';
}

// Differential check of the solver output against the exhaustive scan.
bool oracle_agrees(const Solved& s, const Region& region, std::ostream& err) {
  auto expected = brute_force(s.equations, region);
  auto actual = enumerate_points(s.set, region);
  if (expected == actual) {
    err << "oracle: agreement (" << expected.size() << " points)\n";
    return true;
  }
  err << "oracle: MISMATCH (solver " << actual.size() << " points, scan "
      << expected.size() << " points)\n";
  return false;
}

int run_solve(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  Solved s = solve_input(opt);
  if (opt.json_output) {
    out << set_to_json(s.set, s.tag).dump() << '\n';
  } else {
    print_set_text(s, out);
  }
  if (opt.oracle && !oracle_agrees(s, build_region(opt, false), err)) return 1;
  return 0;
}

int run_enumerate(const CommandOptions& opt, bool count_only, std::ostream& out,
                  std::ostream& err) {
  Solved s = solve_input(opt);
  Region region = build_region(opt, true);
  auto points = enumerate_points(s.set, region);
  if (opt.json_output) {
    nlohmann::json j = set_to_json(s.set, s.tag);
    j["count"] = points.size();
    if (!count_only) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Vec3& p : points) arr.push_back(p);
      j["points"] = arr;
    }
    out << j.dump() << '\n';
  } else if (count_only) {
    out << points.size() << '\n';
  } else {
    for (const Vec3& p : points) out << point_str(p) << '\n';
  }
  if (opt.oracle && !oracle_agrees(s, region, err)) return 1;
  return 0;
}

void attach_common(CLI::App* cmd, CommandOptions& opt, bool region_flags) {
  cmd->add_option("equation", opt.equations, "equation string, e.g. \"2x + 3y + 7z = 23\"")
      ->expected(1, 2);
  cmd->add_flag("--system", opt.system, "treat the two equations as a 2x3 system");
  if (region_flags) {
    cmd->add_option("--box", opt.box_spec, "x:LO:HI,y:LO:HI,z:LO:HI");
    cmd->add_option("--ball", opt.ball_spec, "CX,CY,CZ:R");
    cmd->add_flag("--positive", opt.positive, "keep only points with x,y,z > 0");
    cmd->add_flag("--triangle", opt.triangle,
                  "keep only points satisfying the triangle inequalities");
  } else {
    cmd->add_option("--box", opt.box_spec,
                    "box for --oracle cross-check (default [-20,20]^3)");
  }
  cmd->add_flag("--json", opt.json_output, "machine-readable output");
  cmd->add_flag("--oracle", opt.oracle, "cross-check against the brute-force scan");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Integer solution sets of linear Diophantine equations in two "
               "and three variables and of 2x3 systems"};
  app.require_subcommand(1);

  CommandOptions solve_opt, enum_opt, count_opt;
  CLI::App* solve_cmd = app.add_subcommand("solve", "print the parametric solution set");
  attach_common(solve_cmd, solve_opt, false);
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list lattice points inside a region");
  attach_common(enum_cmd, enum_opt, true);
  CLI::App* count_cmd = app.add_subcommand("count", "count lattice points inside a region");
  attach_common(count_cmd, count_opt, true);

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
    auto validate = [&](const CommandOptions& opt) {
      std::size_t want = opt.system ? 2 : 1;
      if (opt.equations.size() != want)
        throw UsageError(opt.system ? "--system needs exactly two equations"
                                    : "expected exactly one equation");
    };
    if (solve_cmd->parsed()) {
      validate(solve_opt);
      return run_solve(solve_opt, out, err);
    }
    if (enum_cmd->parsed()) {
      validate(enum_opt);
      return run_enumerate(enum_opt, false, out, err);
    }
    validate(count_opt);
    return run_enumerate(count_opt, true, out, err);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dio::cli
