#include "pseudospec/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

using json = nlohmann::ordered_json;

StructurePattern structure_from_json(const json& j, int n) {
  const std::string kind = j.at("kind").get<std::string>();
  const bool real = j.value("real", false);
  if (kind == "full") return StructurePattern::full(n);
  if (kind == "toeplitz") return StructurePattern::toeplitz(n, j.at("support").get<std::vector<int>>(), real);
  if (kind == "hankel") return StructurePattern::hankel(n, j.at("support").get<std::vector<int>>(), real);
  if (kind == "hamiltonian") {
    const int n_half = j.at("n_half").get<int>();
    if (2 * n_half != n) throw Error(ErrorCode::InvalidInput, "n_half does not match matrix order");
    return StructurePattern::hamiltonian(n_half, real);
  }
  throw Error(ErrorCode::Parse, "unknown structure kind '" + kind + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw Error(ErrorCode::Parse, "trailing characters in number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::Parse, "bad number '" + s + "'");
  }
}

long long parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw Error(ErrorCode::Parse, "trailing characters in integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::Parse, "bad integer '" + s + "'");
  }
}

std::uint64_t parse_u64(const std::string& s, int base) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used, base);
    if (used != s.size()) throw Error(ErrorCode::Parse, "trailing characters in '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::Parse, "bad unsigned integer '" + s + "'");
  }
}

StructurePattern with_dim(const StructurePattern& S, int dim) {
  switch (S.kind()) {
    case StructureKind::Full: return StructurePattern::full(dim);
    case StructureKind::Toeplitz: return StructurePattern::toeplitz(dim, S.support(), S.is_real());
    case StructureKind::Hankel: return StructurePattern::hankel(dim, S.support(), S.is_real());
    case StructureKind::Hamiltonian:
      if (S.dim() != dim) throw Error(ErrorCode::Parse, "Hamiltonian label does not match dimension");
      return S;
  }
  return S;
}

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string matrix_to_json(const MatrixFile& file) {
  const Matrix& A = file.matrix;
  std::ostringstream out;
  out << "{\n  \"n\": " << A.rows() << ",\n  \"entries\": [";
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      out << ((i == 0 && j == 0) ? "\n    " : ",\n    ");
      out << '[' << format_real(A(i, j).real()) << ", " << format_real(A(i, j).imag()) << ']';
    }
  }
  out << "\n  ]";
  if (file.structure) {
    const auto& S = *file.structure;
    out << ",\n  \"structure\": {\"kind\": \"" << to_string(S.kind()) << '"';
    if (S.kind() == StructureKind::Toeplitz || S.kind() == StructureKind::Hankel) {
      out << ", \"support\": [";
      for (std::size_t k = 0; k < S.support().size(); ++k) out << (k ? ", " : "") << S.support()[k];
      out << ']';
    } else if (S.kind() == StructureKind::Hamiltonian) {
      out << ", \"n_half\": " << S.n_half();
    }
    out << ", \"real\": " << (S.is_real() ? "true" : "false") << '}';
  }
  if (file.generator) {
    const auto& g = *file.generator;
    out << ",\n  \"generator\": {\"family\": " << json(g.family).dump() << ", \"seed\": " << g.seed
        << ", \"params\": {";
    for (std::size_t k = 0; k < g.params.size(); ++k) {
      out << (k ? ", " : "") << json(g.params[k].first).dump() << ": " << format_real(g.params[k].second);
    }
    out << "}}";
  }
  out << "\n}\n";
  return out.str();
}

MatrixFile matrix_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  try {
    MatrixFile file;
    const int n = doc.at("n").get<int>();
    if (n < 2) throw Error(ErrorCode::InvalidInput, "matrix order must be at least 2");
    const auto& entries = doc.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::InvalidInput, "entries must hold n^2 [re, im] pairs");
    }
    file.matrix.resize(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto& e = entries[static_cast<std::size_t>(i * n + j)];
        if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidInput, "entry must be [re, im]");
        file.matrix(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
      }
    }
    require_valid_matrix(file.matrix);
    if (doc.contains("structure")) {
      file.structure = structure_from_json(doc["structure"], n);
      if (!is_member(file.matrix, *file.structure)) {
        throw Error(ErrorCode::InvalidInput, "matrix is not a member of its declared structure " +
                                                 file.structure->label());
      }
    }
    if (doc.contains("generator")) {
      const auto& g = doc["generator"];
      GeneratorInfo info;
      info.family = g.at("family").get<std::string>();
      info.seed = g.at("seed").get<std::uint64_t>();
      if (g.contains("params")) {
        for (const auto& [key, value] : g["params"].items()) info.params.emplace_back(key, value.get<double>());
      }
      file.generator = info;
    }
    return file;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

MatrixFile read_matrix_file(const std::string& path) { return matrix_from_json(read_text_file(path)); }

std::uint64_t matrix_hash(const Matrix& A) {
  std::uint64_t h = 14695981039346656037ull;
  const auto mix = [&h](const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t k = 0; k < size; ++k) {
      h ^= bytes[k];
      h *= 1099511628211ull;
    }
  };
  const std::uint64_t n = static_cast<std::uint64_t>(A.rows());
  mix(&n, sizeof n);
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      const double parts[2] = {A(i, j).real(), A(i, j).imag()};
      mix(parts, sizeof parts);
    }
  }
  return h;
}

std::string hash_hex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

StructurePattern pattern_from_label(const std::string& label) {
  std::string body = label;
  bool real = false;
  const std::string real_tag = "[real]";
  if (body.size() > real_tag.size() && body.compare(body.size() - real_tag.size(), real_tag.size(), real_tag) == 0) {
    real = true;
    body.resize(body.size() - real_tag.size());
  }
  // Banded labels carry no dimension; the smallest admissible order is used
  // and callers rebind it with with_dim().
  const auto brace = body.find_first_of("{(");
  const std::string kind = body.substr(0, brace);
  if (kind == "full" && brace == std::string::npos) return StructurePattern::full(2);
  if (kind == "hamiltonian" && brace != std::string::npos && body.back() == ')') {
    const int n_half = static_cast<int>(parse_int(body.substr(brace + 1, body.size() - brace - 2)));
    return StructurePattern::hamiltonian(n_half, real);
  }
  if ((kind == "toeplitz" || kind == "hankel") && brace != std::string::npos && body.back() == '}') {
    std::vector<int> support;
    for (const auto& part : split(body.substr(brace + 1, body.size() - brace - 2), ',')) {
      support.push_back(static_cast<int>(parse_int(part)));
    }
    int reach = 1;
    for (int s : support) reach = std::max(reach, std::abs(s) + 1);
    return kind == "toeplitz" ? StructurePattern::toeplitz(std::max(reach, 2), support, real)
                              : StructurePattern::hankel(std::max(reach, 2), support, real);
  }
  throw Error(ErrorCode::Parse, "bad structure label '" + label + "'");
}

void write_cloud_csv(std::ostream& out, const PointCloud& cloud, std::uint64_t hash) {
  out << "# pseudospec cloud v1\n";
  out << "# epsilon=" << format_real(cloud.epsilon) << '\n';
  out << "# dim=" << cloud.pattern.dim() << '\n';
  out << "# pattern=" << cloud.pattern.label() << '\n';
  out << "# kind=" << to_string(cloud.kind) << '\n';
  out << "# K=" << cloud.angle_count << '\n';
  out << "# samples=" << cloud.samples << '\n';
  out << "# seed=" << cloud.seed << '\n';
  out << "# swept=";
  for (std::size_t k = 0; k < cloud.swept.size(); ++k) out << (k ? "," : "") << cloud.swept[k];
  out << '\n';
  out << "# matrix_hash=" << hash_hex(hash) << '\n';
  out << "re,im,source_eigen,angle_index,sample_index\n";
  for (const auto& p : cloud.points) {
    out << format_real(p.z.real()) << ',' << format_real(p.z.imag()) << ',' << p.source_eigen << ','
        << p.angle_index << ',' << p.sample_index << '\n';
  }
}

std::string cloud_to_csv(const PointCloud& cloud, std::uint64_t hash) {
  std::ostringstream out;
  write_cloud_csv(out, cloud, hash);
  return out.str();
}

CloudFile cloud_from_csv(const std::string& text) {
  CloudFile file;
  std::istringstream in(text);
  std::string line;
  bool have_columns = false;
  int dim = 0;
  std::string pattern_label = "full";
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2);
      const std::string value = line.substr(eq + 1);
      if (key == "epsilon") file.cloud.epsilon = parse_double(value);
      else if (key == "dim") dim = static_cast<int>(parse_int(value));
      else if (key == "pattern") pattern_label = value;
      else if (key == "kind") file.cloud.kind = cloud_kind_from_string(value);
      else if (key == "K") file.cloud.angle_count = static_cast<int>(parse_int(value));
      else if (key == "samples") file.cloud.samples = static_cast<int>(parse_int(value));
      else if (key == "seed") file.cloud.seed = parse_u64(value, 10);
      else if (key == "matrix_hash") file.matrix_hash = parse_u64(value, 16);
      else if (key == "swept" && !value.empty()) {
        for (const auto& part : split(value, ',')) file.cloud.swept.push_back(static_cast<std::size_t>(parse_int(part)));
      }
      continue;
    }
    if (!have_columns) {
      if (line != "re,im,source_eigen,angle_index,sample_index") {
        throw Error(ErrorCode::Parse, "unexpected cloud column header");
      }
      have_columns = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 5) throw Error(ErrorCode::Parse, "cloud row must have 5 fields");
    file.cloud.points.push_back(CloudPoint{Complex(parse_double(fields[0]), parse_double(fields[1])),
                                           static_cast<int>(parse_int(fields[2])),
                                           static_cast<int>(parse_int(fields[3])),
                                           static_cast<int>(parse_int(fields[4]))});
  }
  if (!have_columns) throw Error(ErrorCode::Parse, "cloud file has no column header");
  if (dim < 2) throw Error(ErrorCode::Parse, "cloud file lacks a valid dim header");
  file.cloud.pattern = with_dim(pattern_from_label(pattern_label), dim);
  return file;
}

CloudFile read_cloud_file(const std::string& path) { return cloud_from_csv(read_text_file(path)); }

std::string report_to_json(const SensitivityReport& report) {
  json j;
  j["pattern"] = report.pattern.label();
  j["dim"] = report.pattern.dim();
  json values = json::array();
  for (const auto& z : report.eigenvalues) values.push_back({z.real(), z.imag()});
  j["eigenvalues"] = values;
  j["kappa"] = report.kappas;
  j["kappa_structured"] = report.kappas_structured;
  j["epsilon"] = report.epsilon;
  j["epsilon_structured"] = report.epsilon_structured;
  j["pair"] = {report.pair.first, report.pair.second};
  j["pair_structured"] = {report.pair_structured.first, report.pair_structured.second};
  j["excluded_structured"] = report.excluded_structured;
  return j.dump(2) + "\n";
}

SensitivityReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    SensitivityReport r;
    const int dim = j.at("dim").get<int>();
    r.pattern = with_dim(pattern_from_label(j.at("pattern").get<std::string>()), dim);
    for (const auto& z : j.at("eigenvalues")) r.eigenvalues.emplace_back(z[0].get<double>(), z[1].get<double>());
    r.kappas = j.at("kappa").get<std::vector<double>>();
    r.kappas_structured = j.at("kappa_structured").get<std::vector<double>>();
    r.epsilon = j.at("epsilon").get<double>();
    r.epsilon_structured = j.at("epsilon_structured").get<double>();
    r.pair = {j.at("pair")[0].get<std::size_t>(), j.at("pair")[1].get<std::size_t>()};
    r.pair_structured = {j.at("pair_structured")[0].get<std::size_t>(), j.at("pair_structured")[1].get<std::size_t>()};
    r.excluded_structured = j.at("excluded_structured").get<std::vector<std::size_t>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) throw Error(ErrorCode::InvalidInput, "write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw Error(ErrorCode::InvalidInput, "cannot rename onto '" + path + "': " + ec.message());
}

}  // namespace pseudospec
