#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "ccc/errors.hpp"
#include "ccc/parse.hpp"

namespace ccc::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string name = trim(item);
    if (name.empty()) throw UsageError("empty variable name in ring '" + text + "'");
    if (!std::isalpha(static_cast<unsigned char>(name[0])) ||
        !std::all_of(name.begin(), name.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        })) {
      throw UsageError("invalid variable name '" + name + "'");
    }
    out.push_back(name);
  }
  if (out.empty()) throw UsageError("the ring needs at least one variable");
  return out;
}

Command parse_command(const std::string& s) {
  if (s == "segre") return Command::Segre;
  if (s == "chern") return Command::Chern;
  if (s == "csm") return Command::Csm;
  if (s == "euler") return Command::Euler;
  if (s == "euler-complement") return Command::EulerComplement;
  throw UsageError("unknown command '" + s + "'");
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// "0" alone requests the zero ideal; otherwise every generator must be
// nonzero text.
std::vector<Polynomial> parse_ideal_text(const std::string& text, const RingPtr& ring,
                                         const std::string& what) {
  if (trim(text).empty()) throw UsageError(what + " is empty (use \"0\" for the zero ideal)");
  try {
    return parse_generators(text, ring);
  } catch (const ParseError& e) {
    throw UsageError(what + ": " + e.what());
  }
}

std::vector<Polynomial> parse_file_generators(const IdealFile& file, const RingPtr& ring,
                                              const std::string& path) {
  std::vector<Polynomial> gens;
  for (const auto& [line, text] : file.generators) {
    try {
      gens.push_back(parse_polynomial(text, ring));
    } catch (const ParseError& e) {
      throw UsageError(path + ":" + std::to_string(line) + ": " + e.what());
    }
  }
  if (gens.empty()) throw UsageError(path + ": no generators after 'ideal:'");
  return gens;
}

void validate_generators(const std::vector<Polynomial>& gens, std::uint32_t prime,
                         const std::string& what) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_homogeneous()) {
      throw UsageError(what + ": generator " + std::to_string(i + 1) + " is not homogeneous");
    }
    const int deg = gens[i].total_degree();
    if (deg > 0 && static_cast<std::uint32_t>(deg) % prime == 0) {
      throw UsageError(what + ": prime " + std::to_string(prime) + " divides the degree of generator " +
                       std::to_string(i + 1));
    }
  }
}

std::string format_list(const std::vector<BigInt>& degrees) {
  std::string s = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0) s += ", ";
    s += degrees[i].str();
  }
  return s + "}";
}

// BigInt as a JSON number; values beyond 64 bits would lose precision as
// doubles, so they are emitted as unquoted integer literals verbatim.
nlohmann::ordered_json json_integer(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return nlohmann::ordered_json::parse(v.str());
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Segre:
      return "segre";
    case Command::Chern:
      return "chern";
    case Command::Csm:
      return "csm";
    case Command::Euler:
      return "euler";
    case Command::EulerComplement:
      return "euler-complement";
  }
  return "unknown";
}

IdealFile parse_ideal_file(const std::string& contents) {
  IdealFile file;
  std::stringstream ss(contents);
  std::string raw;
  std::size_t line_no = 0;
  bool in_ideal = false;
  bool have_ring = false;
  while (std::getline(ss, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    auto starts = [&](std::string_view key) {
      return line.size() >= key.size() && line.compare(0, key.size(), key) == 0;
    };
    if (!in_ideal && starts("ring:")) {
      file.ring = split_names(line.substr(5));
      have_ring = true;
    } else if (!in_ideal && starts("prime:")) {
      std::string value = trim(line.substr(6));
      if (value.empty() || !std::all_of(value.begin(), value.end(), ::isdigit) ||
          value.size() > 10) {
        throw UsageError("line " + std::to_string(line_no) + ": invalid prime '" + value + "'");
      }
      std::uint64_t p = std::stoull(value);
      if (p > UINT32_MAX) {
        throw UsageError("line " + std::to_string(line_no) + ": prime too large");
      }
      file.prime = static_cast<std::uint32_t>(p);
    } else if (!in_ideal && starts("ideal:")) {
      in_ideal = true;
      std::string rest = trim(line.substr(6));
      if (!rest.empty()) {
        if (rest.back() == ',') rest.pop_back();
        file.generators.emplace_back(line_no, rest);
      }
    } else if (in_ideal) {
      if (line.back() == ',') line.pop_back();
      file.generators.emplace_back(line_no, trim(line));
    } else {
      throw UsageError("line " + std::to_string(line_no) +
                       ": expected 'ring:', 'prime:' or 'ideal:'");
    }
  }
  (void)have_ring;
  if (!in_ideal) throw UsageError("ideal file has no 'ideal:' section");
  return file;
}

Request parse_request(const std::vector<std::string>& args) {
  CLI::App app{"Degrees of Segre, Chern and Chern-Schwartz-MacPherson classes", "ccc"};
  std::string command, ring_text, ideal_text, ideal_file, ideal2_text, format = "list";
  std::optional<std::uint32_t> prime;
  std::optional<std::uint64_t> seed;
  int retries = 5;
  bool verify = false, singular_locus = false;
  unsigned jobs = 1;
  app.add_option("command", command, "segre | chern | csm | euler | euler-complement")
      ->required();
  app.add_option("--ring", ring_text, "comma separated variable names, highest first");
  auto* ideal_opt = app.add_option("--ideal", ideal_text, "comma separated generators");
  auto* file_opt = app.add_option("--ideal-file", ideal_file, "file in the ideal file format");
  ideal_opt->excludes(file_opt);
  app.add_option("--ideal2", ideal2_text, "second ideal (euler-complement)");
  app.add_option("--prime", prime, "field characteristic (default 32003)");
  app.add_option("--seed", seed, "random seed (default: drawn from entropy)");
  app.add_option("--retries", retries, "genericity retries per residual")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--verify", verify, "rerun with an independent seed and compare");
  app.add_option("--format", format, "list | poly | json")
      ->check(CLI::IsMember({"list", "poly", "json"}));
  app.add_flag("--singular-locus", singular_locus,
               "replace a single generator f by its Jacobian ideal (f, df/dx_i)");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Request req;
  req.command = parse_command(command);
  req.format = format == "poly" ? OutputFormat::Poly
               : format == "json" ? OutputFormat::Json
                                  : OutputFormat::List;
  req.jobs = jobs;
  req.policy.seed = seed ? *seed : entropy_seed();
  req.policy.max_retries = retries;
  req.policy.verify = verify;

  std::optional<IdealFile> file;
  if (!ideal_file.empty()) {
    std::ifstream in(ideal_file);
    if (!in) throw UsageError("cannot read ideal file '" + ideal_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      file = parse_ideal_file(buf.str());
    } catch (const UsageError& e) {
      throw UsageError(ideal_file + ": " + e.what());
    }
  } else if (ideal_text.empty()) {
    throw UsageError("one of --ideal or --ideal-file is required");
  }

  std::vector<std::string> names;
  if (!ring_text.empty()) names = split_names(ring_text);
  if (file && !file->ring.empty()) {
    if (!names.empty() && names != file->ring) {
      throw UsageError("--ring disagrees with the ring declared in " + ideal_file);
    }
    names = file->ring;
  }
  if (names.empty()) throw UsageError("no ring given (use --ring or a 'ring:' line)");
  std::uint32_t p = PrimeField::kDefaultPrime;
  if (file && file->prime) p = *file->prime;
  if (prime) {
    if (file && file->prime && *file->prime != *prime) {
      throw UsageError("--prime disagrees with the prime declared in " + ideal_file);
    }
    p = *prime;
  }
  req.ring = Ring::make(names, p);

  req.ideal = file ? parse_file_generators(*file, req.ring, ideal_file)
                   : parse_ideal_text(ideal_text, req.ring, "--ideal");
  validate_generators(req.ideal, p, "ideal");
  std::erase_if(req.ideal, [](const Polynomial& f) { return f.is_zero(); });

  if (singular_locus) {
    if (req.ideal.size() != 1) {
      throw UsageError("--singular-locus needs exactly one nonzero generator");
    }
    req.ideal = jacobian_ideal(req.ideal.front()).generators();
  }

  if (req.command == Command::EulerComplement) {
    if (ideal2_text.empty()) throw UsageError("euler-complement needs --ideal2");
    req.second_ideal = parse_ideal_text(ideal2_text, req.ring, "--ideal2");
    validate_generators(*req.second_ideal, p, "ideal2");
    std::erase_if(*req.second_ideal, [](const Polynomial& f) { return f.is_zero(); });
  } else if (!ideal2_text.empty()) {
    throw UsageError("--ideal2 is only valid for euler-complement");
  }
  return req;
}

Response run(const Request& request) {
  const auto start = std::chrono::steady_clock::now();
  Response resp;
  resp.command = request.command;
  resp.n = static_cast<int>(request.ring->num_variables()) - 1;
  resp.prime = request.ring->field().prime();
  resp.seed = request.policy.seed;
  const Ideal ideal(request.ring, request.ideal);
  auto take = [&](ClassReport report) {
    resp.retries += report.retries;
    resp.warnings.insert(resp.warnings.end(), report.warnings.begin(), report.warnings.end());
    return report;
  };
  switch (request.command) {
    case Command::Segre:
      resp.report = take(segre_class(ideal, request.policy, request.jobs));
      break;
    case Command::Chern:
      resp.report = take(chern_class(ideal, request.policy, request.jobs));
      break;
    case Command::Csm:
      resp.report = take(csm_class(ideal, request.policy, request.jobs));
      break;
    case Command::Euler:
      resp.euler = *take(csm_class(ideal, request.policy, request.jobs)).euler;
      break;
    case Command::EulerComplement: {
      const Ideal other(request.ring, *request.second_ideal);
      const BigInt whole = *take(csm_class(ideal, request.policy, request.jobs)).euler;
      const BigInt removed =
          *take(csm_class(ideal_sum(ideal, other), request.policy, request.jobs)).euler;
      resp.euler = whole - removed;
      break;
    }
  }
  resp.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return resp;
}

std::string format_output(const Response& response, OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["command"] = to_string(response.command);
    j["n"] = response.n;
    if (response.report) {
      const auto& r = *response.report;
      j["k"] = r.k;
      if (r.d) j["d"] = *r.d;
      auto degrees = nlohmann::ordered_json::array();
      for (const auto& a : r.degrees) degrees.push_back(json_integer(a));
      j["degrees"] = degrees;
      j["poly"] = r.chow.to_string();
      if (r.euler) j["euler"] = json_integer(*r.euler);
    } else if (response.euler) {
      j["euler"] = json_integer(*response.euler);
    }
    j["seed"] = response.seed;
    j["retries"] = response.retries;
    j["prime"] = response.prime;
    return j.dump() + "\n";
  }
  if (response.euler) return response.euler->str() + "\n";
  const auto& r = *response.report;
  if (format == OutputFormat::Poly) return r.chow.to_string() + "\n";
  return format_list(r.degrees) + "\n";
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Request req = parse_request(args);
    Response resp = run(req);
    out << format_output(resp, req.format);
    for (const auto& w : resp.warnings) err << "warning: " << w << "\n";
    err << "seed=" << resp.seed << " retries=" << resp.retries << " time=" << resp.wall_seconds
        << "s\n";
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    out << "usage: ccc <segre|chern|csm|euler|euler-complement> --ring v1,v2,... "
           "(--ideal \"g1, g2, ...\" | --ideal-file PATH) [--ideal2 \"...\"] [--prime P] "
           "[--seed S] [--retries R] [--verify] [--format list|poly|json] "
           "[--singular-locus] [--jobs N]\n";
    return kExitOk;
  } catch (const GenericityFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitGenericity;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const RingMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace ccc::cli
