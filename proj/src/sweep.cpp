// Copyright 2026 The liebkagome Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "lk/sweep.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <ctime>
#include <set>
#include <sstream>

#include "lk/error.hpp"
#include "lk/format.hpp"
#include "lk/rng.hpp"

namespace lk {

std::vector<double> default_jprime_grid() { return linear_range(0.3, 1.7, 0.05); }

std::vector<double> default_field_grid() { return {0.0, 0.1, 0.2, 0.3, 0.45, 0.6}; }

void SweepPlan::validate() const {
    require(cells >= 1, "plan: L must be >= 1");
    require(J > 0.0, "plan: J must be > 0");
    require(!jprimes.empty(), "plan: jprime list is empty");
    require(!fields.empty(), "plan: h list is empty");
    for (double jp : jprimes) require(jp >= 0.0 && std::isfinite(jp), "plan: jprime values must be >= 0");
    for (double h : fields) require(std::isfinite(h), "plan: h values must be finite");
    require(std::set<double>(jprimes.begin(), jprimes.end()).size() == jprimes.size(),
            "plan: jprime list has duplicates");
    require(std::set<double>(fields.begin(), fields.end()).size() == fields.size(), "plan: h list has duplicates");
    require(engine.engine == Engine::Exact || engine.reads >= 1, "plan: reads must be >= 1");
    require(outputs.magnetization || outputs.structure_factor, "plan: no outputs requested");
    if (outputs.structure_factor)
        require(sq.resolution >= SqOptions::kMinResolution, "plan: resolution must be >= 8");
}

std::string SweepPlan::describe() const {
    std::ostringstream out;
    out << "L=" << cells << "\nboundary=" << to_string(boundary) << "\nJ=" << format_number(J) << "\njprime=";
    for (std::size_t k = 0; k < jprimes.size(); ++k) out << (k ? "," : "") << format_number(jprimes[k]);
    out << "\nh=";
    for (std::size_t k = 0; k < fields.size(); ++k) out << (k ? "," : "") << format_number(fields[k]);
    out << "\nengine=" << to_string(engine.engine) << "\nreads=" << engine.reads << "\nseed=" << engine.seed;
    if (engine.engine == Engine::SA) out << "\nsa=" << engine.sa.schedule.describe();
    if (engine.engine == Engine::SQA)
        out << "\nsqa=P=" << engine.sqa.trotter << ";beta=" << format_number(engine.sqa.beta) << ";"
            << engine.sqa.schedule.describe();
    out << "\nembed=" << (engine.embed ? "true" : "false");
    if (engine.embed) out << "\njfm=" << format_number(engine.chain_coupling);
    if (outputs.structure_factor)
        out << "\nzone=" << to_string(sq.zone) << "\nresolution=" << sq.resolution
            << "\nshear=" << format_number(sq.shear) << "\nground_only=" << (sq.ground_only ? "true" : "false");
    out << '\n';
    return out.str();
}

const PointResult& SweepResult::at(double jprime, double h) const {
    for (const auto& p : points)
        if (p.jprime == jprime && p.h == h) return p;
    fail(ErrorKind::InvalidArgument,
         "sweep result: no point at jprime=" + format_number(jprime) + ", h=" + format_number(h));
}

std::uint64_t point_seed(std::uint64_t base, double jprime, double h) {
    // + 0.0 folds -0 onto 0.
    jprime += 0.0;
    h += 0.0;
    return derive_seed(derive_seed(base, std::bit_cast<std::uint64_t>(jprime)), std::bit_cast<std::uint64_t>(h));
}

PointResult run_point(const Lattice& lattice, const SweepPlan& plan, double jprime, double h) {
    PointResult point;
    point.jprime = jprime;
    point.h = h;
    point.seed = point_seed(plan.engine.seed, jprime, h);
    try {
        const auto model = SpinModel::from_lattice(lattice, plan.J, jprime, h);
        EngineSpec spec = plan.engine;
        spec.seed = point.seed;
        auto samples = sample(model, spec);
        point.magnetization = magnetization(samples);
        if (plan.outputs.structure_factor) {
            SqOptions sq = plan.sq;
            sq.workers = plan.engine.workers;
            point.sq = structure_factor(samples, lattice, sq);
        }
        if (plan.keep_samples) point.samples = std::move(samples);
    } catch (const Error& e) {
        fail(ErrorKind::Sweep, "point jprime=" + format_number(jprime) + " h=" + format_number(h) + ": " + e.what());
    }
    return point;
}

namespace {

std::string timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

SweepResult run_sweep(const SweepPlan& plan) {
    plan.validate();
    SweepResult result;
    result.provenance.plan = plan.describe();
    result.provenance.version = LK_VERSION;
    result.provenance.started = timestamp();

    auto jprimes = plan.jprimes;
    auto fields = plan.fields;
    std::sort(jprimes.begin(), jprimes.end());
    std::sort(fields.begin(), fields.end());
    const auto lattice = build_lattice(plan.cells, plan.boundary);
    result.points.reserve(jprimes.size() * fields.size());
    for (double jp : jprimes)
        for (double h : fields) result.points.push_back(run_point(lattice, plan, jp, h));

    result.provenance.finished = timestamp();
    return result;
}

std::vector<FieldPoint> field_curve(const SweepPlan& plan) {
    require(plan.jprimes.size() == 1, "field_curve: plan must fix a single jprime");
    SweepPlan p = plan;
    p.outputs = {true, false};
    p.keep_samples = false;
    const auto result = run_sweep(p);
    std::vector<FieldPoint> out;
    out.reserve(result.points.size());
    for (const auto& pt : result.points) out.push_back({pt.h, pt.magnetization});
    return out;
}

} // namespace lk
