// parproj command-line front end. Talks to the library only through parproj.h.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "parproj/parproj.h"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kInvalidModel = 3;
constexpr int kIoError = 4;
constexpr int kInternal = 5;

struct CliError {
  int code;
  std::string message;
};

using ContextPtr = std::unique_ptr<pp_context, decltype(&pp_context_destroy)>;
using QuadraticPtr = std::unique_ptr<pp_quadratic, decltype(&pp_quadratic_destroy)>;
using ParaboloidPtr = std::unique_ptr<pp_paraboloid, decltype(&pp_paraboloid_destroy)>;
using ProjectionNdPtr = std::unique_ptr<pp_projection_nd, decltype(&pp_projection_nd_destroy)>;
using RasterPtr = std::unique_ptr<pp_raster, decltype(&pp_raster_destroy)>;

int exit_code_for(pp_status status) {
  switch (status) {
  case PP_ERR_DEGENERATE_CUBIC:
  case PP_ERR_DEGENERATE_QUADRATIC:
  case PP_ERR_INVALID_MODEL: return kInvalidModel;
  case PP_ERR_INVALID_ARGUMENT:
  case PP_ERR_DIMENSION_MISMATCH:
  case PP_ERR_ZERO_DIRECTION:
  case PP_ERR_INVALID_ORDERING: return kParseError;
  default: return kInternal;
  }
}

void check(pp_status status, const pp_context* ctx, const std::string& where = {}) {
  if (status == PP_OK)
    return;
  std::string msg = pp_context_last_error(ctx);
  if (msg.empty())
    msg = pp_status_string(status);
  throw CliError{exit_code_for(status), where.empty() ? msg : where + ": " + msg};
}

std::string number(double v) {
  if (!std::isfinite(v))
    return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Minimal JSON object writer; keys are emitted in insertion order.
class JsonObject {
public:
  JsonObject& field(const std::string& key, double v) { return raw(key, number(v)); }
  JsonObject& field(const std::string& key, int v) { return raw(key, std::to_string(v)); }
  JsonObject& field(const std::string& key, const std::string& v) {
    return raw(key, "\"" + v + "\"");
  }
  JsonObject& field(const std::string& key, const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + number(v[i]);
    return raw(key, s + "]");
  }
  JsonObject& raw(const std::string& key, const std::string& json) {
    body_ += (body_.empty() ? "" : ",") + ("\"" + key + "\":") + json;
    return *this;
  }
  std::string str() const { return "{" + body_ + "}"; }

private:
  std::string body_;
};

std::string points_json(const pp_projection2& proj) {
  std::string s = "[";
  for (int i = 0; i < proj.count; ++i)
    s += (i ? ",[" : "[") + number(proj.points[i].x) + "," + number(proj.points[i].y) + "]";
  return s + "]";
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
        ++used;
      if (used != item.size())
        throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CliError{kParseError, what + ": cannot parse '" + item + "' as a number"};
    }
  }
  if (out.empty())
    throw CliError{kParseError, what + ": empty list"};
  return out;
}

QuadraticPtr make_quadratic(pp_context* ctx, double a, double b, double g,
                            const std::string& where = {}) {
  pp_quadratic* raw = nullptr;
  check(pp_quadratic_create(ctx, a, b, g, &raw), ctx, where);
  return {raw, &pp_quadratic_destroy};
}

struct ProjectQuery {
  double alpha = 0, beta = 0, gamma = 0, x = 0, y = 0;
};

std::string project_record(pp_context* ctx, const ProjectQuery& q, pp_method method,
                           std::optional<int> row) {
  const std::string where = row ? "row " + std::to_string(*row) : std::string{};
  QuadraticPtr s = make_quadratic(ctx, q.alpha, q.beta, q.gamma, where);

  pp_projection2 proj{};
  check(pp_project(ctx, s.get(), q.x, q.y, method, &proj), ctx, where);
  pp_region region{};
  check(pp_classify(ctx, s.get(), q.x, q.y, &region), ctx, where);
  pp_case_data cd{};
  check(pp_case_data_compute(ctx, s.get(), q.x, q.y, 1, &cd), ctx, where);

  JsonObject rec;
  if (row)
    rec.field("row", *row);
  rec.field("alpha", q.alpha).field("beta", q.beta).field("gamma", q.gamma);
  rec.field("x", q.x).field("y", q.y);
  rec.field("method", std::string(method == PP_METHOD_THEOREM ? "theorem" : "corollary"));
  rec.field("branch", std::string(proj.count == 1 ? "single" : "pair"));
  rec.field("region", std::string(pp_region_name(region)));
  rec.raw("points", points_json(proj));
  rec.field("p", cd.p).field("q", cd.q).field("delta", cd.delta);
  rec.field("distance", std::hypot(q.x - proj.points[0].x, q.y - proj.points[0].y));
  return rec.str();
}

std::vector<ProjectQuery> read_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw CliError{kIoError, "cannot open batch file '" + path + "'"};

  std::vector<ProjectQuery> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos)
      continue;
    if (lineno == 1 && line.find_first_of("abcdfhijklmnopqrstuvwxyzABCDFGHIJKLMNOPQRSTUVWXYZ_") !=
                           std::string::npos)
      continue; // header
    const std::vector<double> v = parse_list(line, "row " + std::to_string(lineno));
    if (v.size() != 5)
      throw CliError{kParseError, "row " + std::to_string(lineno) +
                                      ": expected 5 fields alpha,beta,gamma,x,y, got " +
                                      std::to_string(v.size())};
    rows.push_back({v[0], v[1], v[2], v[3], v[4]});
  }
  return rows;
}

pp_method parse_method(const std::string& m) {
  return m == "theorem" ? PP_METHOD_THEOREM : PP_METHOD_COROLLARY;
}

std::string region_pgm(const pp_raster* raster) {
  const int w = pp_raster_width(raster);
  const int h = pp_raster_height(raster);
  const uint8_t* codes = pp_raster_codes(raster);
  std::string out = "P2\n" + std::to_string(w) + " " + std::to_string(h) + "\n2\n";
  constexpr int per_line = 32;
  for (int row = 0; row < h; ++row) {
    for (int col = 0; col < w; ++col) {
      out += static_cast<char>('0' + codes[row * w + col]);
      const bool eol = col + 1 == w || (col + 1) % per_line == 0;
      out += eol ? '\n' : ' ';
    }
  }
  return out;
}

std::string region_csv(const pp_raster* raster) {
  const int w = pp_raster_width(raster);
  const int h = pp_raster_height(raster);
  const uint8_t* codes = pp_raster_codes(raster);
  std::string out = "x,y,region\n";
  for (int row = 0; row < h; ++row) {
    for (int col = 0; col < w; ++col) {
      pp_point2 pt{};
      pp_raster_sample_point(raster, row, col, &pt);
      out += number(pt.x) + "," + number(pt.y) + "," + std::to_string(codes[row * w + col]) + "\n";
    }
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw CliError{kIoError, "cannot open '" + path + "' for writing"};
  out << text;
  out.flush();
  if (!out)
    throw CliError{kIoError, "failed writing '" + path + "'"};
}

const char* kind_name(pp_cubic_kind kind) {
  switch (kind) {
  case PP_CUBIC_ONE_REAL: return "one_real";
  case PP_CUBIC_SIMPLE_DOUBLE: return "simple_double";
  case PP_CUBIC_THREE_REAL: return "three_real";
  }
  return "unknown";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact projection onto parabolas and paraboloids"};
  app.require_subcommand(1);

  pp_context* raw_ctx = nullptr;
  if (pp_context_create(&raw_ctx) != PP_OK) {
    std::cerr << "error: cannot allocate context\n";
    return kInternal;
  }
  ContextPtr ctx(raw_ctx, &pp_context_destroy);

  // project
  ProjectQuery pq;
  std::string batch;
  std::string method = "corollary";
  auto* project = app.add_subcommand("project", "Project a point onto the graph of a quadratic");
  auto* p_alpha = project->add_option("--alpha", pq.alpha, "Quadratic coefficient");
  project->add_option("--beta", pq.beta, "Linear coefficient")->default_val(0.0);
  project->add_option("--gamma", pq.gamma, "Constant coefficient")->default_val(0.0);
  auto* p_x = project->add_option("--x", pq.x, "Query abscissa");
  auto* p_y = project->add_option("--y", pq.y, "Query ordinate");
  auto* p_batch = project->add_option("--batch", batch, "CSV file with rows alpha,beta,gamma,x,y");
  project->add_option("--method", method, "corollary (three cases) or theorem (five cases)")
      ->check(CLI::IsMember({"corollary", "theorem"}));
  p_batch->excludes(p_alpha)->excludes(p_x)->excludes(p_y);

  // classify
  ProjectQuery cq;
  auto* classify = app.add_subcommand("classify", "Report the projection region of a point");
  classify->add_option("--alpha", cq.alpha)->required();
  classify->add_option("--beta", cq.beta)->default_val(0.0);
  classify->add_option("--gamma", cq.gamma)->default_val(0.0);
  classify->add_option("--x", cq.x)->required();
  classify->add_option("--y", cq.y)->required();

  // analyze
  ProjectQuery aq;
  std::string analyze_format = "json";
  auto* analyze = app.add_subcommand("analyze", "Vertex, focus, directrix and frontier ordinate");
  analyze->add_option("--alpha", aq.alpha)->required();
  analyze->add_option("--beta", aq.beta)->default_val(0.0);
  analyze->add_option("--gamma", aq.gamma)->default_val(0.0);
  analyze->add_option("--format", analyze_format)->check(CLI::IsMember({"json", "text"}));

  // solve-cubic
  std::vector<double> cubic;
  auto* solve = app.add_subcommand("solve-cubic", "Real roots of a x^3 + b x^2 + c x + d");
  solve->add_option("coeffs", cubic, "a b c d")->required()->expected(4)->allow_extra_args(false);

  // minimize-quartic
  std::vector<double> quartic;
  auto* minimize = app.add_subcommand("minimize-quartic", "Global minimizers of a quartic");
  minimize->add_option("coeffs", quartic, "c4 c3 c2 c1 c0")->required()->expected(5);

  // project-nd
  double nd_alpha = 0.0;
  double nd_y = 0.0;
  std::string nd_x;
  auto* project_nd = app.add_subcommand("project-nd", "Project onto the graph of alpha ||x||^2");
  project_nd->add_option("--alpha", nd_alpha)->required();
  project_nd->add_option("--x", nd_x, "Comma-separated coordinates")->required();
  project_nd->add_option("--y", nd_y)->required();

  // regions
  ProjectQuery rq{2.0, 1.0, -1.0, 0.0, 0.0};
  pp_raster_spec spec{};
  pp_default_raster_spec(&spec);
  std::string format = "pgm";
  std::string output = "-";
  auto* regions = app.add_subcommand("regions", "Rasterize the three projection regions");
  regions->add_option("--alpha", rq.alpha)->capture_default_str();
  regions->add_option("--beta", rq.beta)->capture_default_str();
  regions->add_option("--gamma", rq.gamma)->capture_default_str();
  regions->add_option("--xmin", spec.x_min)->capture_default_str();
  regions->add_option("--xmax", spec.x_max)->capture_default_str();
  regions->add_option("--ymin", spec.y_min)->capture_default_str();
  regions->add_option("--ymax", spec.y_max)->capture_default_str();
  regions->add_option("--width", spec.width)->capture_default_str();
  regions->add_option("--height", spec.height)->capture_default_str();
  regions->add_option("--format", format)->check(CLI::IsMember({"pgm", "csv"}));
  regions->add_option("-o,--output", output, "Output path, - for stdout")->capture_default_str();

  // oracle (debugging aid, not listed in help)
  std::string oracle_quartic;
  std::string oracle_cubic;
  ProjectQuery oq;
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers")->group("");
  auto* o_quartic = oracle->add_option("--quartic", oracle_quartic, "c4,c3,c2,c1,c0");
  auto* o_cubic = oracle->add_option("--cubic", oracle_cubic, "a,b,c,d");
  auto* o_alpha = oracle->add_option("--alpha", oq.alpha);
  oracle->add_option("--beta", oq.beta)->default_val(0.0);
  oracle->add_option("--gamma", oq.gamma)->default_val(0.0);
  oracle->add_option("--x", oq.x)->default_val(0.0);
  oracle->add_option("--y", oq.y)->default_val(0.0);
  o_quartic->excludes(o_cubic)->excludes(o_alpha);
  o_cubic->excludes(o_alpha);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*project) {
      const pp_method m = parse_method(method);
      if (!batch.empty()) {
        const std::vector<ProjectQuery> rows = read_batch(batch);
        int row = 0;
        for (const ProjectQuery& q : rows)
          std::cout << project_record(ctx.get(), q, m, ++row) << '\n';
      } else {
        if (!*p_alpha || !*p_x || !*p_y)
          throw CliError{kParseError, "project needs --alpha, --x and --y, or --batch FILE"};
        std::cout << project_record(ctx.get(), pq, m, std::nullopt) << '\n';
      }
    } else if (*classify) {
      QuadraticPtr s = make_quadratic(ctx.get(), cq.alpha, cq.beta, cq.gamma);
      pp_region region{};
      check(pp_classify(ctx.get(), s.get(), cq.x, cq.y, &region), ctx.get());
      std::cout << JsonObject{}
                       .field("x", cq.x)
                       .field("y", cq.y)
                       .field("region", std::string(pp_region_name(region)))
                       .field("code", static_cast<int>(region))
                       .str()
                << '\n';
    } else if (*analyze) {
      QuadraticPtr s = make_quadratic(ctx.get(), aq.alpha, aq.beta, aq.gamma);
      pp_axis_geometry g{};
      check(pp_axis_analyze(ctx.get(), s.get(), &g), ctx.get());
      if (analyze_format == "json") {
        std::cout << JsonObject{}
                         .field("x0", g.x0)
                         .field("vertex", std::vector<double>{g.x0, g.vertex_y})
                         .field("focus", std::vector<double>{g.focus_x, g.focus_y})
                         .field("directrix_y", g.directrix_y)
                         .field("y0", g.y0)
                         .field("curvature_radius", g.curvature_radius)
                         .str()
                  << '\n';
      } else {
        const std::pair<const char*, std::string> rows[] = {
            {"x0", number(g.x0)},
            {"vertex", number(g.x0) + " " + number(g.vertex_y)},
            {"focus", number(g.focus_x) + " " + number(g.focus_y)},
            {"directrix_y", number(g.directrix_y)},
            {"y0", number(g.y0)},
            {"curvature_radius", number(g.curvature_radius)},
        };
        for (const auto& [name, value] : rows) {
          char label[32];
          std::snprintf(label, sizeof label, "%-18s", name);
          std::cout << label << value << '\n';
        }
      }
    } else if (*solve) {
      pp_cubic_roots roots{};
      check(pp_cubic_solve(ctx.get(), cubic[0], cubic[1], cubic[2], cubic[3], &roots), ctx.get());
      JsonObject rec;
      rec.field("coeffs", cubic).field("kind", std::string(kind_name(roots.kind)));
      switch (roots.kind) {
      case PP_CUBIC_ONE_REAL: rec.field("roots", std::vector<double>{roots.roots[0]}); break;
      case PP_CUBIC_SIMPLE_DOUBLE:
        rec.field("roots", std::vector<double>{roots.roots[0], roots.roots[1]});
        rec.field("simple", roots.roots[0]).field("double", roots.roots[1]);
        break;
      case PP_CUBIC_THREE_REAL:
        rec.field("roots", std::vector<double>{roots.roots[0], roots.roots[1], roots.roots[2]});
        rec.field("theta", roots.theta);
        break;
      }
      std::cout << rec.str() << '\n';
    } else if (*minimize) {
      pp_minimizer_set set{};
      check(pp_quartic_minimize(ctx.get(), quartic.data(), &set), ctx.get());
      std::cout << JsonObject{}
                       .field("coeffs", quartic)
                       .field("minimizers", std::vector<double>(set.x, set.x + set.count))
                       .str()
                << '\n';
    } else if (*project_nd) {
      const std::vector<double> x = parse_list(nd_x, "--x");
      pp_paraboloid* raw_p = nullptr;
      check(pp_paraboloid_create(ctx.get(), nd_alpha, x.size(), &raw_p), ctx.get());
      ParaboloidPtr P(raw_p, &pp_paraboloid_destroy);
      pp_projection_nd* raw_proj = nullptr;
      check(pp_paraboloid_project(ctx.get(), P.get(), x.data(), x.size(), nd_y, &raw_proj),
            ctx.get());
      ProjectionNdPtr proj(raw_proj, &pp_projection_nd_destroy);
      double delta = 0.0;
      check(pp_paraboloid_delta(ctx.get(), P.get(), x.data(), x.size(), nd_y, &delta), ctx.get());

      JsonObject rec;
      rec.field("alpha", nd_alpha).field("x", x).field("y", nd_y).field("delta", delta);
      if (pp_projection_nd_kind(proj.get()) == PP_ND_SPHERE) {
        double radius = 0.0;
        double height = 0.0;
        check(pp_projection_nd_sphere(proj.get(), &radius, &height), ctx.get());
        rec.field("branch", std::string("sphere")).field("radius", radius).field("height", height);
      } else {
        std::vector<double> w(x.size());
        double y = 0.0;
        check(pp_projection_nd_point(proj.get(), w.data(), w.size(), &y), ctx.get());
        double sq = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
          sq += (x[i] - w[i]) * (x[i] - w[i]);
        sq += (nd_y - y) * (nd_y - y);
        rec.field("branch", std::string("point")).field("w", w).field("height", y);
        rec.field("distance", std::sqrt(sq));
      }
      std::cout << rec.str() << '\n';
    } else if (*regions) {
      QuadraticPtr s = make_quadratic(ctx.get(), rq.alpha, rq.beta, rq.gamma);
      pp_raster* raw_r = nullptr;
      check(pp_raster_create(ctx.get(), s.get(), &spec, &raw_r), ctx.get());
      RasterPtr raster(raw_r, &pp_raster_destroy);
      write_output(output, format == "pgm" ? region_pgm(raster.get()) : region_csv(raster.get()));
    } else if (*oracle) {
      pp_oracle_config cfg{};
      pp_oracle_default_config(&cfg);
      if (!oracle_cubic.empty()) {
        const std::vector<double> c = parse_list(oracle_cubic, "--cubic");
        if (c.size() != 4)
          throw CliError{kParseError, "--cubic needs 4 coefficients"};
        int count = 0;
        check(pp_oracle_root_count(ctx.get(), c[0], c[1], c[2], c[3], &cfg, &count), ctx.get());
        std::cout << JsonObject{}.field("coeffs", c).field("distinct_roots", count).str() << '\n';
      } else {
        std::vector<double> coeffs(5);
        if (!oracle_quartic.empty()) {
          coeffs = parse_list(oracle_quartic, "--quartic");
          if (coeffs.size() != 5)
            throw CliError{kParseError, "--quartic needs 5 coefficients"};
        } else if (*o_alpha) {
          QuadraticPtr s = make_quadratic(ctx.get(), oq.alpha, oq.beta, oq.gamma);
          check(pp_distance_quartic(s.get(), oq.x, oq.y, coeffs.data()), ctx.get());
        } else {
          throw CliError{kParseError, "oracle needs --quartic, --cubic or --alpha"};
        }
        pp_oracle_result r{};
        check(pp_oracle_min_quartic(ctx.get(), coeffs.data(), &cfg, &r), ctx.get());
        std::cout << JsonObject{}
                         .field("coeffs", coeffs)
                         .field("minimizers", std::vector<double>(r.minimizers, r.minimizers + r.count))
                         .field("min_value", r.min_value)
                         .raw("tie", r.tie ? "true" : "false")
                         .str()
                  << '\n';
      }
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
  return kOk;
}
