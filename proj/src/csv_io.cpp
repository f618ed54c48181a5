#include "spinchain/csv_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace spinchain {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string trace_to_csv(const FidelityTrace& trace) {
  std::string out = "t,f_abs,f_sq,fidelity\n";
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    out += format_double(trace.times[i]);
    out += ',';
    out += format_double(trace.f_abs[i]);
    out += ',';
    out += format_double(trace.f_abs[i] * trace.f_abs[i]);
    out += ',';
    out += format_double(trace.fidelity[i]);
    out += '\n';
  }
  return out;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out = "n,variant,fid_max,t_meas,t_id,t_est,ratio,delta12,f_m,gamma1_sq,gamma2_sq\n";
  for (const SweepRow& row : result.rows) {
    out += std::to_string(row.n_sites);
    out += ',';
    out += variant_label(row.variant);
    out += ',';
    if (!row.error.empty()) {
      out += "ERROR:" + row.error + ",,,,,,,,\n";
      continue;
    }
    out += format_double(row.report.fidelity_max);
    out += ',';
    out += format_double(row.report.t_measured);
    out += ',';
    out += format_double(row.report.t_ideal);
    out += ',';
    out += format_double(row.report.t_estimate);
    out += ',';
    out += format_double(row.report.ratio_ideal_over_measured);
    out += ',';
    out += format_double(row.delta12);
    out += ',';
    out += format_double(row.f_m);
    out += ',';
    out += format_double(row.gamma1_sq);
    out += ',';
    out += format_double(row.gamma2_sq);
    out += '\n';
  }
  return out;
}

std::string eigvec_to_csv(const EigenvectorTable& table) {
  std::string out = "site";
  for (int mode : table.modes) out += ",lambda_" + std::to_string(mode);
  out += '\n';
  for (std::size_t s = 0; s < table.sites.size(); ++s) {
    out += std::to_string(table.sites[s]);
    for (std::size_t m = 0; m < table.modes.size(); ++m) {
      out += ',';
      if (table.components[m][s].has_value()) {
        out += format_double(*table.components[m][s]);
      } else {
        out += "NA";
      }
    }
    out += '\n';
  }
  return out;
}

std::string onsite_to_csv(const OnsiteTable& table) {
  std::string out = "site,h_ii\n";
  for (std::size_t s = 0; s < table.sites.size(); ++s) {
    out += std::to_string(table.sites[s]);
    out += ',';
    out += format_double(table.energies[s]);
    out += '\n';
  }
  return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
    if (!stream) {
      throw std::runtime_error("cannot open " + temp.string() + " for writing");
    }
    stream.write(content.data(), static_cast<std::streamsize>(content.size()));
    stream.flush();
    if (!stream) {
      throw std::runtime_error("short write to " + temp.string());
    }
  }
  std::filesystem::rename(temp, target);
}

} // namespace spinchain
