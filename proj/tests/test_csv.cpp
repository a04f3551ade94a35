#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include "longwave/csv.hpp"
#include "longwave/error.hpp"

using namespace longwave;

namespace {

ConvergenceRecord sample_record() {
  ConvergenceRecord r;
  r.method = "lwp2";
  r.model = "bbm";
  r.epsilon = 0.1;
  r.tau = 0.2 / 3.0;
  r.n_modes = 128;
  r.t_final = 10.0;
  r.l2_error = 1.2345678901234567e-7;
  r.h1_error = 3.0e-300;
  r.mass_drift = 0.0;
  r.wall_time_s = 0.5;
  return r;
}

}  // namespace

TEST_SUITE("csv") {

TEST_CASE("header") {
  std::ostringstream out;
  write_csv(out, {});
  CHECK(out.str() ==
        "method,model,epsilon,tau,n_modes,t_final,l2_error,h1_error,mass_drift,wall_time_s\n");
}

TEST_CASE("row formatting uses 17 significant digits") {
  std::ostringstream out;
  write_csv(out, {sample_record()});
  const auto text = out.str();
  CHECK(text.find("lwp2,bbm,0.10000000000000001,0.066666666666666666,128,10,"
                  "1.2345678901234566e-07,3.0000000000000002e-300,0,0.5\n") != std::string::npos);
}

TEST_CASE("round trip is exact") {
  auto a = sample_record();
  auto b = sample_record();
  b.method = "lawson_euler";
  b.epsilon = 0.05;
  b.l2_error = std::nextafter(1.0, 2.0);
  std::stringstream io;
  write_csv(io, {a, b});
  const auto back = read_csv(io);
  REQUIRE(back.size() == 2);
  CHECK(back[0].method == "lwp2");
  CHECK(back[0].tau == a.tau);
  CHECK(back[0].l2_error == a.l2_error);
  CHECK(back[0].h1_error == a.h1_error);
  CHECK(back[0].status == RecordStatus::ok);
  CHECK(back[1].method == "lawson_euler");
  CHECK(back[1].l2_error == b.l2_error);
  CHECK(back[1].n_modes == 128);
}

TEST_CASE("flagged rows carry nan") {
  auto r = sample_record();
  r.status = RecordStatus::failed;
  r.l2_error = r.h1_error = r.mass_drift = std::numeric_limits<double>::quiet_NaN();
  r.note = "solution blew up";
  std::stringstream io;
  write_csv(io, {r});
  CHECK(io.str().find(",nan,nan,nan,") != std::string::npos);
  CHECK(io.str().find('#') == std::string::npos);
  const auto back = read_csv(io);
  REQUIRE(back.size() == 1);
  CHECK(std::isnan(back[0].l2_error));
  CHECK(back[0].status == RecordStatus::failed);
}

TEST_CASE("flag log") {
  auto ok = sample_record();
  auto under = sample_record();
  under.status = RecordStatus::under_resolved;
  under.note = "reference tail 1e-6";
  auto failed = sample_record();
  failed.status = RecordStatus::failed;
  failed.note = "boom";
  std::ostringstream log;
  CHECK(write_flag_log(log, {ok, under, failed}) == 2);
  const auto text = log.str();
  CHECK(text.find("# under-resolved: method=lwp2 model=bbm epsilon=0.10000000000000001") == 0);
  CHECK(text.find("(reference tail 1e-6)") != std::string::npos);
  CHECK(text.find("# failed: method=lwp2") != std::string::npos);
  CHECK(text.find(": boom\n") != std::string::npos);
}

TEST_CASE("reader rejects malformed input") {
  {
    std::istringstream in("method,model,epsilon\nlwp1,bbm,0.1\n");
    CHECK_THROWS_AS(read_csv(in), InputError);
  }
  {
    std::istringstream in(std::string(kCsvHeader) + "\nlwp1,bbm,0.1,0.1\n");
    CHECK_THROWS_AS(read_csv(in), InputError);
  }
  {
    std::istringstream in(std::string(kCsvHeader) + "\nlwp1,bbm,zero,0.1,128,10,1,1,0,0\n");
    CHECK_THROWS_AS(read_csv(in), InputError);
  }
  {
    std::istringstream in("");
    CHECK_THROWS_AS(read_csv(in), InputError);
  }
  CHECK_THROWS_AS(read_csv(std::string("/nonexistent/dir/x.csv")), InputError);
}

TEST_CASE("files") {
  const auto path = (std::filesystem::temp_directory_path() / "longwave_csv_test.csv").string();
  write_csv(path, {sample_record()});
  const auto back = read_csv(path);
  REQUIRE(back.size() == 1);
  CHECK(back[0].l2_error == sample_record().l2_error);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(write_csv(std::string("/nonexistent/dir/x.csv"), {}), InputError);
}

}
