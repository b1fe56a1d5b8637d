#include <bsbs/bsbs.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"

namespace {

struct Config {
  bsbs_config* ptr = nullptr;
  Config() { REQUIRE(bsbs_config_create(&ptr) == BSBS_OK); }
  ~Config() { bsbs_config_destroy(ptr); }
  Config(const Config&) = delete;
  Config& operator=(const Config&) = delete;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(bsbs_status_string(BSBS_OK)) == "ok");
  CHECK(std::string(bsbs_status_string(BSBS_ERR_UNSTABLE)) == "unstable");
  CHECK(std::string(bsbs_version()) == "1.0.0");
  CHECK(bsbs_csv_schema_version() == 1);
}

TEST_CASE("null arguments are rejected, not dereferenced") {
  CHECK(bsbs_config_create(nullptr) == BSBS_ERR_INVALID_ARGUMENT);
  CHECK(bsbs_evaluate_point(nullptr, nullptr) == BSBS_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(bsbs_last_error()) > 0);
  double out = 0;
  CHECK(bsbs_lyapunov_residual(nullptr, nullptr, nullptr, &out) == BSBS_ERR_INVALID_ARGUMENT);
  bsbs_config_destroy(nullptr);
  bsbs_sweep_destroy(nullptr);
}

TEST_CASE("config handle") {
  Config c;
  double v = 0;
  CHECK(bsbs_config_get_param(c.ptr, "g_coupling_a", &v) == BSBS_OK);
  CHECK(v == 0.2);
  CHECK(bsbs_config_set(c.ptr, "g_coupling_a", "0.15") == BSBS_OK);
  CHECK(bsbs_config_apply_override(c.ptr, "n_th=20") == BSBS_OK);
  CHECK(bsbs_config_get_param(c.ptr, "n_th", &v) == BSBS_OK);
  CHECK(v == 20.0);
  CHECK(bsbs_config_set(c.ptr, "nope", "1") == BSBS_ERR_CONFIG);
  CHECK(std::string(bsbs_last_error()).find("nope") != std::string::npos);
  CHECK(bsbs_config_get_param(c.ptr, "pair", &v) == BSBS_ERR_CONFIG);
  CHECK(bsbs_config_set(c.ptr, "pair", "acoustic-optical") == BSBS_OK);
  CHECK(std::string(bsbs_config_pair(c.ptr)) == "acoustic-optical");
  CHECK(bsbs_config_set(c.ptr, "axis1", "n_th:0:100:3") == BSBS_OK);
  CHECK(bsbs_config_axis_count(c.ptr) == 1);
  CHECK(bsbs_config_set(c.ptr, "out", "x.csv") == BSBS_OK);
  CHECK(std::string(bsbs_config_output(c.ptr)) == "x.csv");

  bsbs_config* copy = nullptr;
  REQUIRE(bsbs_config_clone(c.ptr, &copy) == BSBS_OK);
  CHECK(bsbs_config_set(copy, "g_coupling_a", "0.3") == BSBS_OK);
  CHECK(bsbs_config_get_param(c.ptr, "g_coupling_a", &v) == BSBS_OK);
  CHECK(v == 0.15);
  bsbs_config_destroy(copy);

  CHECK(bsbs_config_set(c.ptr, "kappa", "-1") == BSBS_OK);
  CHECK(bsbs_config_validate(c.ptr) == BSBS_ERR_CONFIG);
  CHECK(bsbs_config_load_file(c.ptr, "/nonexistent/bsbs.conf") == BSBS_ERR_IO);
}

TEST_CASE("matrices are row-major") {
  Config c;
  double a[36], d[36];
  REQUIRE(bsbs_drift_matrix(c.ptr, a) == BSBS_OK);
  REQUIRE(bsbs_diffusion_matrix(c.ptr, d) == BSBS_OK);
  CHECK(a[0 * 6 + 1] == 1.0);   // -delta_tilde
  CHECK(a[1 * 6 + 0] == -1.0);  // delta_tilde
  CHECK(a[0 * 6 + 3] == -0.2);  // -G_a
  CHECK(a[1 * 6 + 4] == 0.3);   // 2 G_m
  CHECK(a[4 * 6 + 5] == 1.0);
  CHECK(d[4 * 6 + 4] == doctest::Approx(1e-4 * 201 / 2));

  CHECK(bsbs_config_set(c.ptr, "j_m", "0.1") == BSBS_OK);
  CHECK(bsbs_drift_matrix(c.ptr, a) == BSBS_ERR_UNSUPPORTED);
}

TEST_CASE("raw numerics") {
  double a[36] = {0}, d[36] = {0}, v[36], r = -1;
  for (int i = 0; i < 6; ++i) {
    a[i * 7] = -0.5;
    d[i * 7] = 0.5;
  }
  REQUIRE(bsbs_solve_steady_covariance(a, d, 0.0, v, &r) == BSBS_OK);
  for (int i = 0; i < 6; ++i) CHECK(v[i * 7] == doctest::Approx(0.5));
  CHECK(r <= 1e-15);
  CHECK(bsbs_solve_steady_covariance(a, d, 0.0, v, nullptr) == BSBS_OK);

  double w[36];
  REQUIRE(bsbs_evolve_covariance(a, d, v, 0.01, 1.0, w) == BSBS_OK);
  CHECK(w[0] == doctest::Approx(0.5));
  CHECK(bsbs_evolve_covariance(a, d, v, -0.01, 1.0, w) == BSBS_ERR_DOMAIN);

  bsbs_stability s;
  REQUIRE(bsbs_assess_stability(a, &s) == BSBS_OK);
  CHECK(s.stable == 1);
  CHECK(s.spectral_abscissa == doctest::Approx(-0.5));

  double chi[16];
  REQUIRE(bsbs_extract_pair(v, BSBS_MODE_OPTICAL, BSBS_MODE_MECHANICAL, chi) == BSBS_OK);
  CHECK(bsbs_extract_pair(v, BSBS_MODE_OPTICAL, BSBS_MODE_OPTICAL, chi) == BSBS_ERR_DOMAIN);
  CHECK(bsbs_extract_pair(v, static_cast<bsbs_mode>(7), BSBS_MODE_OPTICAL, chi) ==
        BSBS_ERR_DOMAIN);
  bsbs_entanglement e;
  REQUIRE(bsbs_logarithmic_negativity(chi, &e) == BSBS_OK);
  CHECK(e.nu_minus == doctest::Approx(0.5));
  CHECK(e.log_negativity == 0.0);

  int physical = -1;
  REQUIRE(bsbs_physicality_check(v, &physical) == BSBS_OK);
  CHECK(physical == 1);

  for (int i = 0; i < 6; ++i) a[i * 7] = 0.5;
  CHECK(bsbs_solve_steady_covariance(a, d, 0.0, v, nullptr) == BSBS_ERR_UNSTABLE);
  CHECK(bsbs_assess_stability(a, &s) == BSBS_OK);
  CHECK(s.stable == 0);

  double n = 0;
  REQUIRE(bsbs_thermal_occupancy(std::log(2.0), &n) == BSBS_OK);
  CHECK(n == doctest::Approx(1.0));
  CHECK(bsbs_thermal_occupancy(0.0, &n) == BSBS_ERR_DOMAIN);
}

TEST_CASE("point evaluation") {
  Config c;
  bsbs_point_result p;
  REQUIRE(bsbs_evaluate_point(c.ptr, &p) == BSBS_OK);
  CHECK(p.status == BSBS_OK);
  CHECK(p.has_entanglement);
  CHECK(p.entanglement.log_negativity > 0);
  CHECK(p.physical);

  CHECK(bsbs_config_set(c.ptr, "delta_tilde", "1") == BSBS_OK);
  CHECK(bsbs_evaluate_point(c.ptr, &p) == BSBS_ERR_UNSTABLE);
  CHECK(p.has_stability);
  CHECK_FALSE(p.stability.stable);
  CHECK_FALSE(p.has_entanglement);

  const auto path = std::filesystem::temp_directory_path() / "bsbs_capi_point.csv";
  REQUIRE(bsbs_point_write_csv(&p, path.string().c_str()) == BSBS_OK);
  const std::string csv = slurp(path);
  CHECK(csv.rfind("stable,e_n,nu_minus,spectral_abscissa,residual_norm,physical,error\n0,NA,NA,", 0) == 0);
  CHECK(csv.find(",unstable\n") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("sweeps") {
  Config c;
  bsbs_sweep* s = nullptr;
  CHECK(bsbs_sweep_run(c.ptr, &s) == BSBS_ERR_CONFIG);  // no axis
  CHECK(s == nullptr);
  REQUIRE(bsbs_config_set(c.ptr, "axis1", "g_coupling_a:0:0.3:4") == BSBS_OK);
  REQUIRE(bsbs_config_set(c.ptr, "axis2", "delta_a:0.5:1.5:3") == BSBS_OK);
  REQUIRE(bsbs_sweep_run(c.ptr, &s) == BSBS_OK);
  CHECK(bsbs_sweep_size(s) == 12);
  bsbs_sweep_record rec;
  REQUIRE(bsbs_sweep_record_at(s, 11, &rec) == BSBS_OK);
  CHECK(rec.axis_values[0] == 0.3);
  CHECK(rec.axis_values[1] == 1.5);
  CHECK(rec.has_e_n);
  CHECK(rec.status == BSBS_OK);
  CHECK(bsbs_sweep_record_at(s, 12, &rec) == BSBS_ERR_INVALID_ARGUMENT);

  const auto path = std::filesystem::temp_directory_path() / "bsbs_capi_sweep.csv";
  REQUIRE(bsbs_sweep_write_csv(s, path.string().c_str()) == BSBS_OK);
  const std::string csv = slurp(path);
  CHECK(csv.rfind("g_coupling_a,delta_a,stable,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
  std::filesystem::remove(path);
  CHECK(bsbs_sweep_write_csv(s, "/nonexistent/dir/x.csv") == BSBS_ERR_IO);
  bsbs_sweep_destroy(s);
}

TEST_CASE("figures") {
  CHECK(bsbs_figure_count() == 7);
  CHECK(std::string(bsbs_figure_name(0)) == "fig2");
  CHECK(bsbs_figure_name(7) == nullptr);
  const auto dir = std::filesystem::temp_directory_path() / "bsbs_capi_fig";
  Config c;
  REQUIRE(bsbs_config_set(c.ptr, "grid", "3") == BSBS_OK);
  size_t missing = 99;
  REQUIRE(bsbs_figure_run("fig5b", c.ptr, dir.string().c_str(), &missing) == BSBS_OK);
  CHECK(missing == 0);
  CHECK(std::filesystem::exists(dir / "fig5b.csv"));
  CHECK(std::filesystem::exists(dir / "fig5b.gp"));
  CHECK(bsbs_figure_run("fig7", c.ptr, dir.string().c_str(), nullptr) ==
        BSBS_ERR_PRESET_NOT_FOUND);
  std::filesystem::remove_all(dir);
}

TEST_CASE("last error is per thread") {
  CHECK(bsbs_config_create(nullptr) == BSBS_ERR_INVALID_ARGUMENT);
  const std::string here = bsbs_last_error();
  std::string there;
  std::thread([&] {
    Config c;
    bsbs_config_set(c.ptr, "bogus_key", "1");
    there = bsbs_last_error();
  }).join();
  CHECK(there.find("bogus_key") != std::string::npos);
  CHECK(std::string(bsbs_last_error()) == here);
}
