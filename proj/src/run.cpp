#include "spdcfilm/run.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "spdcfilm/defaults.hpp"
#include "spdcfilm/errors.hpp"
#include "spdcfilm/parallel.hpp"
#include "spdcfilm/tomography.hpp"

namespace spdcfilm {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

void write_grid_csv(const std::string& path, const ScanGrid& grid,
                    const std::string& axis1_header,
                    const std::string& axis2_header,
                    const std::vector<std::pair<std::string, const std::vector<double>*>>&
                        columns) {
  auto out = open_out(path);
  out << axis1_header;
  if (grid.axis2) out << "," << axis2_header;
  for (const auto& [name, values] : columns) out << "," << name;
  out << "\n";
  const int n2 = grid.axis2 ? grid.axis2->count : 1;
  for (int i = 0; i < grid.axis1.count; ++i) {
    for (int j = 0; j < n2; ++j) {
      out << fmt(grid.axis1.value(i));
      if (grid.axis2) out << "," << fmt(grid.axis2->value(j));
      const std::size_t idx = static_cast<std::size_t>(i * n2 + j);
      for (const auto& [name, values] : columns) out << "," << fmt((*values)[idx]);
      out << "\n";
    }
  }
  if (!out) throw IoError("failed while writing " + path);
}

json envelope(const RunConfig& cfg) {
  json env;
  env["version"] = "1.0.0";
  env["timestamp"] = iso_timestamp();
  env["units"] = "arbitrary";
  json echo = json::object();
  for (const auto& [k, v] : cfg.echo) echo[k] = v;
  env["config"] = echo;
  return env;
}

ScanAxis to_radians(const ScanAxis& deg_axis) {
  ScanAxis ax = deg_axis;
  ax.start = deg2rad(deg_axis.start);
  ax.stop = deg2rad(deg_axis.stop);
  return ax;
}

ScanGrid axis_in_degrees(ScanGrid grid) {
  grid.axis1.start = rad2deg(grid.axis1.start);
  grid.axis1.stop = rad2deg(grid.axis1.stop);
  if (grid.axis2) {
    grid.axis2->start = rad2deg(grid.axis2->start);
    grid.axis2->stop = rad2deg(grid.axis2->stop);
  }
  return grid;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + cfg.out_dir);

  const auto path = [&](const char* name) {
    return (fs::path(cfg.out_dir) / name).string();
  };

  RunResult result;
  result.grid_csv = path("grid.csv");
  result.summary_json = path("summary.json");

  json env = envelope(cfg);
  json summary = json::object();

  const JointSetting base = make_setting(cfg);

  switch (cfg.scan) {
    case ScanType::Rate: {
      double value = 0.0;
      if (cfg.polarization_s && cfg.polarization_i) {
        const TomographicPair pair{
            PolarizationState2::from_label(*cfg.polarization_s),
            PolarizationState2::from_label(*cfg.polarization_i)};
        value = projection_rate(base, pair);
        summary["polarized"] = true;
      } else {
        value = unpolarized_rate(base);
        summary["polarized"] = false;
      }
      auto out = open_out(result.grid_csv);
      out << "theta_s_deg,phi_s_deg,theta_i_deg,phi_i_deg,rate\n";
      out << fmt(cfg.theta_s_deg) << "," << fmt(cfg.phi_s_deg) << ","
          << fmt(cfg.theta_i_deg) << "," << fmt(cfg.phi_i_deg) << ","
          << fmt(value) << "\n";
      summary["rate"] = value;
      break;
    }

    case ScanType::PhiSymmetric: {
      const ScanGrid grid = axis_in_degrees(phi_symmetric_scan(
          base, to_radians(cfg.axis1), to_radians(cfg.axis2), cfg.threads));
      write_grid_csv(result.grid_csv, grid, "theta_s_deg", "phi_s_deg",
                     {{"rate", &grid.values}});
      double best = -1.0;
      int bi = 0, bj = 0;
      for (int i = 0; i < grid.axis1.count; ++i)
        for (int j = 0; j < grid.axis2->count; ++j)
          if (grid.at(i, j) > best) {
            best = grid.at(i, j);
            bi = i;
            bj = j;
          }
      summary["peak_theta_s_deg"] = grid.axis1.value(bi);
      summary["peak_phi_s_deg"] = grid.axis2->value(bj);
      summary["peak_value"] = best;
      break;
    }

    case ScanType::Thickness: {
      const ScanGrid grid = thickness_scan(base, cfg.axis1, cfg.threads);
      write_grid_csv(result.grid_csv, grid, "thickness_m", "",
                     {{"rate", &grid.values}});
      const auto period = extract_period(grid, cfg.pump.wavelength_m);
      if (period) {
        summary["oscillation_period_m"] = *period;
        summary["oscillation_period_lambda_p"] =
            *period / cfg.pump.wavelength_m;
      }
      summary["opd_period_m"] =
          opd_period(base.stack, base.signal.theta,
                     2.0 * pi * c0 / base.signal.omega);
      break;
    }

    case ScanType::ThetaMap: {
      const ScanGrid grid = axis_in_degrees(theta_map(
          base, to_radians(cfg.axis1), to_radians(cfg.axis2), cfg.threads));
      write_grid_csv(result.grid_csv, grid, "theta_s_deg", "theta_i_deg",
                     {{"rate", &grid.values}});
      break;
    }

    case ScanType::Tomography: {
      result.tomography_csv = path("tomography.csv");
      result.rho_json = path("rho.json");
      const TomographyRecord rec = measure_tomography(base);
      {
        auto out = open_out(result.tomography_csv);
        out << "state_s,state_i,rate\n";
        for (const auto& e : rec.entries)
          out << e.state_s << "," << e.state_i << "," << fmt(e.rate) << "\n";
      }
      const DensityMatrix4 rho = reconstruct_rho(rec);
      {
        json jr;
        jr["basis"] = {"HH", "HV", "VH", "VV"};
        json rows = json::array();
        for (int i = 0; i < 4; ++i) {
          json row = json::array();
          for (int j = 0; j < 4; ++j)
            row.push_back({{"re", rho(i, j).real()}, {"im", rho(i, j).imag()}});
          rows.push_back(row);
        }
        jr["rho"] = rows;
        auto out = open_out(result.rho_json);
        out << jr.dump(2) << "\n";
      }
      summary["schmidt_number"] = schmidt_number(rho);
      // duplicate the record in grid.csv so every run emits one
      auto out = open_out(result.grid_csv);
      out << "state_s,state_i,rate\n";
      for (const auto& e : rec.entries)
        out << e.state_s << "," << e.state_i << "," << fmt(e.rate) << "\n";
      break;
    }

    case ScanType::SchmidtMap: {
      const SchmidtMap map = schmidt_map(base, to_radians(cfg.axis1),
                                         to_radians(cfg.axis2), cfg.threads);
      const ScanGrid k_deg = axis_in_degrees(map.k_grid);
      write_grid_csv(result.grid_csv, k_deg, "theta_i_deg", "phi_i_deg",
                     {{"schmidt_k", &map.k_grid.values},
                      {"rate", &map.rate_grid.values}});
      summary["argmax_k_theta_i_deg"] = rad2deg(map.argmax_k_theta);
      summary["argmax_k_phi_i_deg"] = rad2deg(map.argmax_k_phi);
      summary["argmax_rate_theta_i_deg"] = rad2deg(map.argmax_rate_theta);
      summary["argmax_rate_phi_i_deg"] = rad2deg(map.argmax_rate_phi);
      break;
    }

    case ScanType::WavelengthSweep: {
      const int n = cfg.axis1.count;
      std::vector<double> rates(static_cast<std::size_t>(n), 0.0);
      std::vector<double> ks(static_cast<std::size_t>(n),
                             std::numeric_limits<double>::quiet_NaN());
      std::vector<double> lambdas(static_cast<std::size_t>(n), 0.0);
      parallel_for(static_cast<std::size_t>(n), cfg.threads, [&](std::size_t i) {
        const double rdeg = cfg.axis1.value(static_cast<int>(i));
        RunConfig point = cfg;
        point.degeneracy_r = rdeg;
        JointSetting s = make_setting(point);
        apply_phi_symmetric(s);
        lambdas[i] = 2.0 * pi * c0 / s.signal.omega;
        rates[i] = unpolarized_rate(s);
        try {
          ks[i] = schmidt_number(rho_direct(s));
        } catch (const UndefinedStateError&) {
        }
      });
      ScanGrid grid;
      grid.axis1 = cfg.axis1;
      grid.values = rates;
      write_grid_csv(result.grid_csv, grid, "degeneracy_r", "",
                     {{"lambda_s_m", &lambdas},
                      {"rate", &rates},
                      {"schmidt_k", &ks}});
      double kmin = std::numeric_limits<double>::infinity();
      for (double k : ks)
        if (!std::isnan(k)) kmin = std::min(kmin, k);
      if (std::isfinite(kmin)) summary["min_schmidt_k"] = kmin;
      break;
    }
  }

  env["summary"] = summary;
  auto out = open_out(result.summary_json);
  out << env.dump(2) << "\n";
  return result;
}

}  // namespace spdcfilm
