#include "cgeom/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "cgeom/constructions.hpp"
#include "cgeom/errors.hpp"
#include "cgeom/geomops.hpp"
#include "cgeom/hopf.hpp"
#include "cgeom/lattice.hpp"
#include "cgeom/text_io.hpp"

namespace cgeom {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConvexGeometry load_geometry(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_geometry(in, path);
}

bool looks_like_lattice_file(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.compare(first, 9, "elements:") == 0;
  }
  return false;
}

// Lattice of a geometry file or an abstract lattice file.
FiniteLattice load_any_lattice(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  if (looks_like_lattice_file(text)) return read_lattice(in, path);
  return lattice_of_closed_sets(read_geometry(in, path));
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex geometries, meet-distributive lattices and their incidence Hopf algebra", "cgeom"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string file, file2, lower, upper, pattern, method = "recursive";
  std::size_t count = 0;
  bool dot = false;

  auto geometry_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("geometry", file, "Geometry file")->required();
    return sub;
  };

  auto* validate = geometry_command("validate", "Check the set-family axioms and the antiexchange property");
  validate->callback([&] {
    action = [&] {
      std::istringstream in(slurp(file));
      auto raw = parse_geometry(in, file);
      const std::size_t n = raw.ground.size();
      ConvexGeometry g = [&] {
        try {
          return validate_family(raw.ground, raw.family);
        } catch (const AxiomViolation& e) {
          out << "INVALID " << e.what() << "\n";
          throw;
        }
      }();
      if (auto bad = check_antiexchange(g)) {
        out << "INVALID antiexchange fails for A=" << g.ground().format_set(bad->base)
            << " x=" << g.ground().name(bad->x) << " y=" << g.ground().name(bad->y) << "\n";
        return int{kExitViolation};
      }
      out << "VALID convex geometry: " << n << " elements, " << g.closed().size() << " closed sets\n";
      out << "antiexchange: OK\n";
      return int{kExitOk};
    };
  });

  auto* lattice = app.add_subcommand("lattice", "Lattice statistics and cover relation");
  lattice->add_option("file", file, "Geometry or lattice file")->required();
  lattice->callback([&] {
    action = [&] {
      const auto l = load_any_lattice(file);
      out << "size: " << l.size() << "\n";
      out << "ranks: " << join_sizes(l.rank_sizes()) << "\n";
      out << "meet-distributive: " << (is_meet_distributive(l) ? "yes" : "no") << "\n";
      out << "distributive: " << (is_distributive(l) ? "yes" : "no") << "\n";
      for (std::size_t x = 0; x < l.size(); ++x) out << "# " << x << " = " << l.label(x) << "\n";
      write_lattice(out, l);
      return int{kExitOk};
    };
  });

  auto* shell_points = app.add_subcommand("shell-points", "Convex shelling of a point configuration");
  shell_points->add_option("points", file, "Points file")->required();
  shell_points->callback([&] {
    action = [&] {
      std::istringstream in(slurp(file));
      write_geometry(out, convex_shelling(read_points(in, file)));
      return int{kExitOk};
    };
  });

  auto* shell_poset = app.add_subcommand("shell-poset", "Poset shelling (down-sets) of a finite poset");
  shell_poset->add_option("poset", file, "Poset file")->required();
  shell_poset->callback([&] {
    action = [&] {
      std::istringstream in(slurp(file));
      write_geometry(out, poset_shelling(read_poset(in, file)));
      return int{kExitOk};
    };
  });

  auto* chain = app.add_subcommand("chain", "Chain geometry Z_n");
  chain->add_option("n", count, "Number of elements")->required()->check(CLI::Range(0, 16));
  chain->callback([&] {
    action = [&] {
      write_geometry(out, chain_geometry(count));
      return int{kExitOk};
    };
  });

  auto* boolean = app.add_subcommand("boolean", "Boolean geometry (n points in convex position)");
  boolean->add_option("n", count, "Number of elements")->required()->check(CLI::Range(0, 16));
  boolean->callback([&] {
    action = [&] {
      write_geometry(out, boolean_geometry(count));
      return int{kExitOk};
    };
  });

  auto* minor_cmd = geometry_command("minor", "Minor M[lower, upper]");
  minor_cmd->add_option("--lower", lower, "Closed set, comma-separated labels or {}")->required();
  minor_cmd->add_option("--upper", upper, "Closed set, comma-separated labels or {}")->required();
  minor_cmd->callback([&] {
    action = [&] {
      const auto g = load_geometry(file);
      const SubsetMask a = g.ground().parse_set(lower), b = g.ground().parse_set(upper);
      write_geometry(out, minor(g, a, b));
      return int{kExitOk};
    };
  });

  auto* product = app.add_subcommand("product", "Product geometry on the disjoint union");
  product->add_option("first", file, "Geometry file")->required();
  product->add_option("second", file2, "Geometry file")->required();
  product->callback([&] {
    action = [&] {
      write_geometry(out, product_geometry(load_geometry(file), load_geometry(file2)));
      return int{kExitOk};
    };
  });

  auto* coproduct_cmd = geometry_command("coproduct", "Coproduct as a formal sum of tensors");
  coproduct_cmd->callback([&] {
    action = [&] {
      out << coproduct(load_geometry(file)).to_string();
      return int{kExitOk};
    };
  });

  auto* antipode_cmd = geometry_command("antipode", "Antipode as a formal sum");
  antipode_cmd->add_option("--method", method, "chain or recursive")
      ->check(CLI::IsMember({"chain", "recursive"}))
      ->capture_default_str();
  antipode_cmd->callback([&] {
    action = [&] {
      const auto g = load_geometry(file);
      out << (method == "chain" ? antipode_chain(g) : antipode_recursive(g)).to_string();
      return int{kExitOk};
    };
  });

  auto* check_hopf = geometry_command("check-hopf", "Verify the antipode axiom on one geometry");
  check_hopf->callback([&] {
    action = [&] {
      const auto report = verify_hopf_axiom(load_geometry(file));
      if (report.ok()) {
        out << "OK\n";
        return int{kExitOk};
      }
      out << "FAIL\nleft residual:\n" << report.left_residual.to_string();
      out << "right residual:\n" << report.right_residual.to_string();
      return int{kExitViolation};
    };
  });

  auto* forbidden = geometry_command("forbidden", "Search for a minor isomorphic to a pattern");
  forbidden->add_option("--pattern", pattern, "Pattern geometry file")->required();
  forbidden->callback([&] {
    action = [&] {
      const auto g = load_geometry(file);
      if (auto w = has_forbidden_minor(g, load_geometry(pattern))) {
        out << "FOUND lower=" << g.ground().format_set(w->lower) << " upper=" << g.ground().format_set(w->upper)
            << "\n";
      } else {
        out << "NONE\n";
      }
      return int{kExitOk};
    };
  });

  auto* canon = app.add_subcommand("canon", "Canonical key of the lattice");
  canon->add_option("file", file, "Geometry or lattice file")->required();
  canon->callback([&] {
    action = [&] {
      out << canonical_key(load_any_lattice(file)).text << "\n";
      return int{kExitOk};
    };
  });

  auto* hasse = geometry_command("hasse", "Hasse diagram of the closed-set lattice");
  hasse->add_flag("--dot", dot, "Emit Graphviz DOT (the only format)");
  hasse->callback([&] {
    action = [&] {
      write_hasse_dot(out, load_geometry(file));
      return int{kExitOk};
    };
  });

  auto* from_lattice = app.add_subcommand("from-lattice", "Geometry of join-irreducibles of a lattice file");
  from_lattice->add_option("lattice", file, "Lattice file")->required();
  from_lattice->callback([&] {
    action = [&] {
      write_geometry(out, geometry_from_lattice(load_any_lattice(file)));
      return int{kExitOk};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kExitOk} : int{kExitInputError};
  }

  try {
    return action ? action() : int{kExitInputError};
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const AxiomViolation& e) {
    // validate already reported on stdout
    if (app.got_subcommand(validate)) return kExitViolation;
    out << "INVALID " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    out << "FAILED " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace cgeom
