#include "io.hpp"

#include <bit>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "version.hpp"

static_assert(std::endian::native == std::endian::little,
              "binary matrix format assumes a little-endian host");

namespace specrange {

namespace {

void write_text(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string jnum_or_null(const std::optional<double>& v) {
  return v ? fmt17(*v) : "null";
}

std::string ju64(std::uint64_t v) {  // seeds as strings: exact for all 64 bits
  return "\"" + std::to_string(v) + "\"";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string aggregate_json(const Aggregate& a) {
  if (a.count == 0) return "null";
  std::string s = "{\"count\":" + std::to_string(a.count);
  s += ",\"mean\":" + fmt17(a.mean);
  s += ",\"median\":" + fmt17(a.median);
  s += ",\"min\":" + fmt17(a.min);
  s += ",\"max\":" + fmt17(a.max) + "}";
  return s;
}

std::string checks_json(const std::vector<CheckResult>& checks) {
  std::string s = "[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (i) s += ",";
    s += "{\"name\":" + jstr(checks[i].name);
    s += ",\"pass\":" + std::string(checks[i].pass ? "true" : "false");
    s += ",\"detail\":" + jstr(checks[i].detail) + "}";
  }
  return s + "]";
}

}  // namespace

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_matrix_csv(const ComplexMatrix& x, const std::string& path) {
  const std::size_t n = x.dim();
  std::string s;
  s.reserve(n * n * 48);
  s += kCsvSchemaComment;
  s += "\ni,j,re,im\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s += std::to_string(i);
      s += ',';
      s += std::to_string(j);
      s += ',';
      s += fmt17(x(i, j).real());
      s += ',';
      s += fmt17(x(i, j).imag());
      s += '\n';
    }
  write_text(path, s);
}

ComplexMatrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  struct Entry {
    std::size_t i, j;
    cx v;
  };
  std::vector<Entry> entries;
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'i') continue;
    std::size_t i, j;
    double re, im;
    if (std::sscanf(line.c_str(), "%zu,%zu,%lf,%lf", &i, &j, &re, &im) != 4)
      throw IoError("malformed matrix CSV row in " + path + ": " + line);
    entries.push_back({i, j, cx(re, im)});
    n = std::max({n, i + 1, j + 1});
  }
  if (n == 0) throw IoError("empty matrix CSV: " + path);
  if (entries.size() != n * n)
    throw IoError("matrix CSV does not cover all entries: " + path);
  ComplexMatrix x(n);
  for (const Entry& e : entries) x(e.i, e.j) = e.v;
  if (!x.all_finite()) throw InvalidArgument("matrix entries must be finite");
  return x;
}

void write_matrix_binary(const ComplexMatrix& x, const std::string& path) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  const char magic[8] = {'S', 'P', 'R', 'M', 'A', 'T', '0', '1'};
  out.write(magic, 8);
  const std::uint64_t n = x.dim();
  out.write(reinterpret_cast<const char*>(&n), 8);
  out.write(reinterpret_cast<const char*>(x.data()),
            std::streamsize(n * n * 2 * sizeof(double)));
  if (!out) throw IoError("write failed: " + path);
}

ComplexMatrix read_matrix_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, "SPRMAT01", 8) != 0)
    throw IoError("bad magic in matrix file: " + path);
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&n), 8);
  if (!in || n == 0 || n > (1ull << 20))
    throw IoError("bad dimension in matrix file: " + path);
  ComplexMatrix x(n);
  in.read(reinterpret_cast<char*>(x.data()), std::streamsize(n * n * 2 * sizeof(double)));
  if (!in) throw IoError("truncated matrix file: " + path);
  if (!x.all_finite()) throw InvalidArgument("matrix entries must be finite");
  return x;
}

void write_profile_csv(const SupportProfile& p, const std::string& path) {
  std::string s;
  s += kCsvSchemaComment;
  s += "\ntheta,lambda,norm,boundary_re,boundary_im\n";
  for (std::size_t j = 0; j < p.grid_size; ++j) {
    s += fmt17(p.thetas[j]);
    s += ',';
    s += fmt17(p.lambdas[j]);
    s += ',';
    s += fmt17(p.norms[j]);
    s += ',';
    s += fmt17(p.boundary[j].real());
    s += ',';
    s += fmt17(p.boundary[j].imag());
    s += '\n';
  }
  write_text(path, s);
}

void write_spectrum_csv(const std::vector<cx>& eigenvalues, const std::string& path) {
  std::string s;
  s += kCsvSchemaComment;
  s += "\nre,im\n";
  for (const cx& z : eigenvalues) {
    s += fmt17(z.real());
    s += ',';
    s += fmt17(z.imag());
    s += '\n';
  }
  write_text(path, s);
}

std::string metrics_json(const MetricsReport& r, std::optional<double> area_ratio) {
  std::string s = "{\n";
  s += "  \"n\": " + std::to_string(r.n) + ",\n";
  s += "  \"operator_norm\": " + fmt17(r.operator_norm) + ",\n";
  s += "  \"numerical_radius\": " + fmt17(r.numerical_radius) + ",\n";
  s += "  \"spectral_radius\": " + fmt17(r.spectral_radius) + ",\n";
  s += "  \"mu3\": " + fmt17(r.mu3) + ",\n";
  s += "  \"mu3_squared_over_n\": " + fmt17(r.mu3_squared_over_n) + ",\n";
  s += "  \"alpha\": " + fmt17(r.alpha) + ",\n";
  s += "  \"hs_norm\": " + fmt17(r.hs_norm) + ",\n";
  s += "  \"target_radius\": " + jnum_or_null(r.target_radius) + ",\n";
  s += "  \"hausdorff_to_target\": " + jnum_or_null(r.hausdorff_to_target) + ",\n";
  s += "  \"hausdorff_certified\": " + jnum_or_null(r.hausdorff_certified) + ",\n";
  s += "  \"area_ratio\": " + jnum_or_null(area_ratio) + ",\n";
  s += "  \"nonzero_trace\": " + std::string(r.nonzero_trace ? "true" : "false") + "\n";
  s += "}\n";
  return s;
}

void write_metrics_json(const MetricsReport& r, std::optional<double> area_ratio,
                        const std::string& path) {
  write_text(path, metrics_json(r, area_ratio));
}

void write_metrics_csv(const MetricsReport& r, std::optional<double> area_ratio,
                       const std::string& path) {
  std::string s;
  s += kCsvSchemaComment;
  s += "\nn,operator_norm,numerical_radius,spectral_radius,mu3,mu3_squared_over_n,"
       "alpha,hs_norm,target_radius,hausdorff_to_target,hausdorff_certified,"
       "area_ratio,nonzero_trace\n";
  s += std::to_string(r.n) + ',' + fmt17(r.operator_norm) + ',' +
       fmt17(r.numerical_radius) + ',' + fmt17(r.spectral_radius) + ',' +
       fmt17(r.mu3) + ',' + fmt17(r.mu3_squared_over_n) + ',' + fmt17(r.alpha) + ',' +
       fmt17(r.hs_norm) + ',';
  s += (r.target_radius ? fmt17(*r.target_radius) : "") + std::string(",");
  s += (r.hausdorff_to_target ? fmt17(*r.hausdorff_to_target) : "") + std::string(",");
  s += (r.hausdorff_certified ? fmt17(*r.hausdorff_certified) : "") + std::string(",");
  s += (area_ratio ? fmt17(*area_ratio) : "") + std::string(",");
  s += r.nonzero_trace ? "1" : "0";
  s += '\n';
  write_text(path, s);
}

void write_manifest(const ManifestInfo& info, const std::string& path) {
  std::string s = "{\n";
  s += "  \"schema\": \"specrange-manifest-v1\",\n";
  s += "  \"code_version\": " + jstr(kCodeVersion) + ",\n";
  s += "  \"command\": " + jstr(info.command) + ",\n";
  s += "  \"ensemble\": " + (info.ensemble ? jstr(*info.ensemble) : "null") + ",\n";
  s += "  \"n_list\": [";
  for (std::size_t i = 0; i < info.n_list.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(info.n_list[i]);
  }
  s += "],\n";
  s += "  \"trials\": " + std::to_string(info.trials) + ",\n";
  s += "  \"m\": " + std::to_string(info.m) + ",\n";
  s += "  \"master_seed\": " + ju64(info.master_seed) + ",\n";
  s += "  \"target_radius\": " + jnum_or_null(info.target_radius) + "\n";
  s += "}\n";
  write_text(path, s);
}

void write_records_csv(const std::vector<ExperimentRecord>& records,
                       const std::string& path) {
  std::string s;
  s += kCsvSchemaComment;
  s += "\nensemble,n,trial,stream_index,status,error,operator_norm,"
       "numerical_radius,spectral_radius,mu3,mu3_sq_over_n,alpha,hs_norm,"
       "hausdorff_raw,hausdorff_certified,area_ratio\n";
  for (const ExperimentRecord& r : records) {
    s += csv_quote(r.spec.to_string()) + ',';
    s += std::to_string(r.n) + ',';
    s += std::to_string(r.trial_index) + ',';
    s += std::to_string(r.stream_index) + ',';
    s += r.ok ? "ok," : "failed,";
    s += csv_quote(r.error) + ',';
    if (r.ok) {
      const MetricsReport& m = r.metrics;
      s += fmt17(m.operator_norm) + ',' + fmt17(m.numerical_radius) + ',' +
           fmt17(m.spectral_radius) + ',' + fmt17(m.mu3) + ',' +
           fmt17(m.mu3_squared_over_n) + ',' + fmt17(m.alpha) + ',' +
           fmt17(m.hs_norm) + ',';
      s += (m.hausdorff_to_target ? fmt17(*m.hausdorff_to_target) : "") + std::string(",");
      s += (m.hausdorff_certified ? fmt17(*m.hausdorff_certified) : "") + std::string(",");
      s += r.area_ratio ? fmt17(*r.area_ratio) : "";
    } else {
      s += ",,,,,,,,,";
    }
    s += '\n';
  }
  write_text(path, s);
}

void write_sweep_summary_json(const EnsembleSpec& proto, const SweepResult& res,
                              const std::vector<CheckResult>& checks,
                              const std::string& path) {
  std::string s = "{\n";
  s += "  \"schema\": \"specrange-summary-v1\",\n";
  s += "  \"command\": \"sweep\",\n";
  s += "  \"ensemble\": " + jstr(proto.to_string()) + ",\n";
  s += "  \"rows\": [\n";
  for (std::size_t i = 0; i < res.rows.size(); ++i) {
    const SweepRow& row = res.rows[i];
    s += "    {\"n\": " + std::to_string(row.n);
    s += ", \"ok\": " + std::to_string(row.ok);
    s += ", \"failed\": " + std::to_string(row.failed);
    s += ", \"operator_norm\": " + aggregate_json(row.operator_norm);
    s += ", \"numerical_radius\": " + aggregate_json(row.numerical_radius);
    s += ", \"spectral_radius\": " + aggregate_json(row.spectral_radius);
    s += ", \"mu3_sq_over_n\": " + aggregate_json(row.mu3_sq_over_n);
    s += ", \"hausdorff\": " + aggregate_json(row.hausdorff);
    s += ", \"area_ratio\": " + aggregate_json(row.area_ratio);
    s += "}";
    if (i + 1 < res.rows.size()) s += ",";
    s += "\n";
  }
  s += "  ],\n";
  s += "  \"checks\": " + checks_json(checks) + "\n";
  s += "}\n";
  write_text(path, s);
}

void write_tail_csv(const TailEstimate& t, const std::string& path) {
  std::string s;
  s += kCsvSchemaComment;
  s += "\nepsilon,exceed,trials,p_hat,wilson_lo,wilson_hi,bound_form\n";
  for (std::size_t i = 0; i < t.epsilons.size(); ++i) {
    s += fmt17(t.epsilons[i]) + ',' + std::to_string(t.exceed[i]) + ',' +
         std::to_string(t.trials) + ',' + fmt17(t.p_hat[i]) + ',' +
         fmt17(t.wilson_lo[i]) + ',' + fmt17(t.wilson_hi[i]) + ',';
    if (!t.bound_form.empty()) s += fmt17(t.bound_form[i]);
    s += '\n';
  }
  write_text(path, s);
}

void write_tail_summary_json(const EnsembleSpec& spec, const TailEstimate& t,
                             const std::vector<CheckResult>& checks,
                             const std::string& path) {
  std::string s = "{\n";
  s += "  \"schema\": \"specrange-summary-v1\",\n";
  s += "  \"command\": \"tail\",\n";
  s += "  \"ensemble\": " + jstr(spec.to_string()) + ",\n";
  s += "  \"n\": " + std::to_string(spec.n) + ",\n";
  s += "  \"trials\": " + std::to_string(t.trials) + ",\n";
  s += "  \"checks\": " + checks_json(checks) + "\n";
  s += "}\n";
  write_text(path, s);
}

void write_norms_csv(const NormStudy& study, const std::string& path) {
  std::string s;
  s += kCsvSchemaComment;
  s += "\nn,k,trials,mean_block_norm,mean_bar_norm,mean_absdiff,bound_3_over_sqrt_k\n";
  for (const NormStudyRow& r : study.rows) {
    s += std::to_string(r.n) + ',' + std::to_string(r.k) + ',' +
         std::to_string(r.trials) + ',' + fmt17(r.mean_block_norm) + ',' +
         fmt17(r.mean_bar_norm) + ',' + fmt17(r.mean_absdiff) + ',' + fmt17(r.bound) +
         '\n';
  }
  write_text(path, s);
}

void write_norms_summary_json(const NormStudy& study,
                              const std::vector<CheckResult>& checks,
                              const std::string& path) {
  std::string s = "{\n";
  s += "  \"schema\": \"specrange-summary-v1\",\n";
  s += "  \"command\": \"norms\",\n";
  s += "  \"sizes\": [";
  for (std::size_t i = 0; i < study.sizes.size(); ++i) {
    const NormStudySizeRow& r = study.sizes[i];
    if (i) s += ",";
    s += "{\"n\":" + std::to_string(r.n) + ",\"trials\":" + std::to_string(r.trials) +
         ",\"mean_bar_norm\":" + fmt17(r.mean_bar_norm) +
         ",\"mean_tri_norm\":" + fmt17(r.mean_tri_norm) + "}";
  }
  s += "],\n";
  s += "  \"checks\": " + checks_json(checks) + "\n";
  s += "}\n";
  write_text(path, s);
}

void write_moments_csv(const MomentStudy& study, const std::string& path) {
  std::string s;
  s += kCsvSchemaComment;
  s += "\nell,n,trials,empirical,limit,rel_err\n";
  for (const MomentRow& r : study.rows) {
    const double rel = r.limit != 0.0 ? (r.empirical - r.limit) / r.limit : 0.0;
    s += std::to_string(r.ell) + ',' + std::to_string(study.n) + ',' +
         std::to_string(study.trials) + ',' + fmt17(r.empirical) + ',' +
         fmt17(r.limit) + ',' + fmt17(rel) + '\n';
  }
  write_text(path, s);
}

void write_moments_summary_json(const MomentStudy& study,
                                const std::vector<CheckResult>& checks,
                                const std::string& path) {
  std::string s = "{\n";
  s += "  \"schema\": \"specrange-summary-v1\",\n";
  s += "  \"command\": \"moments\",\n";
  s += "  \"n\": " + std::to_string(study.n) + ",\n";
  s += "  \"trials\": " + std::to_string(study.trials) + ",\n";
  s += "  \"rows\": [";
  for (std::size_t i = 0; i < study.rows.size(); ++i) {
    const MomentRow& r = study.rows[i];
    if (i) s += ",";
    s += "{\"ell\":" + std::to_string(r.ell) + ",\"empirical\":" + fmt17(r.empirical) +
         ",\"limit\":" + fmt17(r.limit) + "}";
  }
  s += "],\n";
  s += "  \"checks\": " + checks_json(checks) + "\n";
  s += "}\n";
  write_text(path, s);
}

}  // namespace specrange
