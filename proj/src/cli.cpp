#include "symq/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symq/chart.hpp"
#include "symq/forms.hpp"
#include "symq/grid_eval.hpp"
#include "symq/psd.hpp"
#include "symq/sos.hpp"

namespace symq::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A polynomial argument is `-` (stdin), a file in canonical text form, or
/// a form id such as `L:5`.
Polynomial load_polynomial(const std::string& source) {
  if (source == "-" || std::filesystem::is_regular_file(source)) {
    try {
      return parse_polynomial(read_source(source));
    } catch (const std::invalid_argument& e) {
      throw InputError(source + ": " + e.what());
    }
  }
  FormId id;
  try {
    id = FormId::parse(source);
  } catch (const FormSyntaxError&) {
    throw InputError("'" + source + "' is neither a readable file nor a form id");
  }
  return build_form(id);
}

Point parse_point(const std::string& text) {
  Point p;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      p.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw InputError(std::string("bad point: ") + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return p;
}

std::string join_point(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out += ',';
    out += p[i].to_string();
  }
  return out;
}

struct Options {
  std::string form_id;
  std::string poly;
  std::string point;
  std::string target;
  std::string summands;
  std::vector<std::size_t> weights;
  std::uint64_t seed = 0;
  std::size_t max_n = 0;
  std::size_t max_2d = 0;
  bool unicode = false;
  unsigned lift_power = 0;
  std::size_t two_m = 0;
  std::vector<std::int32_t> grid{-2, -1, 0, 1, 2};
  std::string kernel = "auto";
};

int cmd_form(const Options& o, std::ostream& out) {
  FormId id;
  try {
    id = FormId::parse(o.form_id);
  } catch (const FormSyntaxError& e) {
    throw InputError(e.what());
  }
  out << to_text(build_form(id));
  return kPositive;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Polynomial f = load_polynomial(o.poly);
  const Point p = parse_point(o.point);
  if (p.size() != f.num_vars()) {
    throw InputError("point has " + std::to_string(p.size()) + " coordinates, form has " +
                     std::to_string(f.num_vars()) + " variables");
  }
  out << eval(f, p).to_string() << '\n';
  return kPositive;
}

int cmd_psd(const Options& o, std::ostream& out) {
  const PsdCertificate cert = check_psd(load_polynomial(o.poly));
  out << to_text(cert);
  return cert.psd ? kPositive : kNegative;
}

int cmd_notsos(const Options& o, std::ostream& out) {
  const Polynomial f = load_polynomial(o.poly);
  const auto weights = o.weights.empty() ? default_weights(f.num_vars()) : o.weights;
  const ZeroSet z = enumerate_zero_points(f.num_vars(), weights);
  const NonSosCertificate cert = certify_not_sos(f, z, o.seed);
  out << to_text(cert);
  return cert.verdict == SosVerdict::NotSos ? kPositive : kNegative;
}

int cmd_verify_sos(const Options& o, std::ostream& out) {
  SosIdentity id{load_polynomial(o.target), {}};
  try {
    id.summands = parse_summands(read_source(o.summands));
  } catch (const std::invalid_argument& e) {
    throw InputError(o.summands + ": " + e.what());
  }
  const bool ok = verify_sos_identity(id);
  out << "identity: " << (ok ? "true" : "false") << '\n';
  return ok ? kPositive : kNegative;
}

int cmd_chart(const Options& o, std::ostream& out) {
  out << render_chart(o.max_n, o.max_2d, o.unicode);
  return kPositive;
}

int cmd_lift(const Options& o, std::ostream& out) {
  out << to_text(lift(load_polynomial(o.poly), o.lift_power));
  return kPositive;
}

int cmd_sample(const Options& o, std::ostream& out) {
  GridKernel kernel = GridKernel::Auto;
  if (o.kernel == "scalar") kernel = GridKernel::Scalar;
  if (o.kernel == "avx2") kernel = GridKernel::Avx2;
  const GridSearchResult r = grid_search(load_polynomial(o.poly), o.grid, kernel);
  out << "points " << r.points_checked << '\n';
  out << "minimum " << r.minimum.to_string() << " at " << join_point(r.argmin) << '\n';
  out << "verdict " << (r.found_negative() ? "negative_found" : "no_negative_found") << '\n';
  return r.found_negative() ? kNegative : kPositive;
}

int cmd_sos_summands(const Options& o, std::ostream& out) {
  out << summands_to_text(Ln_even_sos_identity(o.two_m).summands);
  return kPositive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for symmetric quartic forms", "symq"};
  app.require_subcommand(1);
  Options o;

  auto* form = app.add_subcommand("form", "Print a named form in canonical text form");
  form->add_option("id", o.form_id, "L:<n>, C:<2m>, cl44, robinson, lax5, lift:<base>:<i>")->required();

  auto* ev = app.add_subcommand("eval", "Evaluate a form exactly at a rational point");
  ev->add_option("poly", o.poly, "file, '-' or form id")->required();
  ev->add_option("point", o.point, "comma-separated rationals, e.g. 1,0,-1/2")->required();

  auto* psd = app.add_subcommand("psd", "Decide PSD for a symmetric quartic (n >= 4)");
  psd->add_option("poly", o.poly, "file, '-' or form id")->required();

  auto* notsos = app.add_subcommand("notsos", "Zero-forcing non-SOS certificate for a quartic");
  notsos->add_option("poly", o.poly, "file, '-' or form id")->required();
  notsos->add_option("--weights", o.weights, "0/1 point weights (default m,m+1)")->delimiter(',');
  notsos->add_option("--seed", o.seed, "seed for the index-subtraction replay");

  auto* verify = app.add_subcommand("verify-sos", "Check target == sum (g*h)^2 exactly");
  verify->add_option("target", o.target, "file, '-' or form id")->required();
  verify->add_option("summands", o.summands, "file of polynomial blocks, g then h per pair")->required();

  auto* chart_cmd = app.add_subcommand("chart", "Print the psd = sos classification chart");
  chart_cmd->add_option("max_n", o.max_n)->required()->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  chart_cmd->add_option("max_2d", o.max_2d)->required()->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  chart_cmd->add_flag("--unicode", o.unicode, "use check mark and cross symbols");

  auto* lift_cmd = app.add_subcommand("lift", "Multiply a form by (x_1 + ... + x_n)^(2i)");
  lift_cmd->add_option("poly", o.poly, "file, '-' or form id")->required();
  lift_cmd->add_option("i", o.lift_power)->required();

  auto* sample = app.add_subcommand("sample", "Search a small integer grid for negative values");
  sample->add_option("poly", o.poly, "file, '-' or form id")->required();
  sample->add_option("--values", o.grid, "coordinate values (default -2,-1,0,1,2)")->delimiter(',');
  sample->add_option("--kernel", o.kernel, "auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto* summands = app.add_subcommand("sos-summands", "Print the SOS summands of L_2m");
  summands->add_option("two_m", o.two_m, "even number of variables >= 4")->required();

  std::vector<const char*> argv{"symq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kInputError;
  }

  try {
    if (form->parsed()) return cmd_form(o, out);
    if (ev->parsed()) return cmd_eval(o, out);
    if (psd->parsed()) return cmd_psd(o, out);
    if (notsos->parsed()) return cmd_notsos(o, out);
    if (verify->parsed()) return cmd_verify_sos(o, out);
    if (chart_cmd->parsed()) return cmd_chart(o, out);
    if (lift_cmd->parsed()) return cmd_lift(o, out);
    if (sample->parsed()) return cmd_sample(o, out);
    if (summands->parsed()) return cmd_sos_summands(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::out_of_range& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::domain_error& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  }
  return kInputError;
}

}  // namespace symq::cli
