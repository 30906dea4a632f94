#include <algorithm>

#include "wrlab/error.hpp"
#include "wrlab/experiment.hpp"

namespace wrlab {

namespace {

const std::vector<double> kThetaSweep{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

ExperimentConfig dnwr_model(double interface, KappaSelector kappa)
{
    ExperimentConfig c;
    c.method = Method::Dnwr;
    c.interfaces = {interface};
    c.thetas = kThetaSweep;
    c.kappa = kappa;
    return c;
}

ExperimentConfig nnwr_on_06(std::vector<double> widths, std::vector<double> thetas)
{
    ExperimentConfig c;
    c.method = Method::Nnwr;
    c.x_left = 0.0;
    c.x_right = 6.0;
    c.interfaces.clear();
    double x = 0.0;
    for (std::size_t i = 0; i + 1 < widths.size(); ++i)
        c.interfaces.push_back(x += widths[i]);
    c.problem = ProblemSelector::ErrorEquations;
    c.thetas = std::move(thetas);
    return c;
}

ExperimentConfig dnwr_error_equations(double a, double t_final)
{
    ExperimentConfig c;
    c.method = Method::Dnwr;
    c.x_left = -3.0;
    c.x_right = 2.0;
    c.interfaces = {-3.0 + a};
    c.t_final = t_final;
    c.problem = ProblemSelector::ErrorEquations;
    c.thetas = {0.5};
    return c;
}

struct Figure {
    const char* id;
    std::vector<ExperimentConfig> (*build)();
};

const Figure kFigures[] = {
    {"dnwr-a-gt-b", [] { return std::vector{dnwr_model(0.0, KappaSelector::One)}; }},
    {"dnwr-a-gt-b-kappa",
     [] { return std::vector{dnwr_model(0.0, KappaSelector::OnePlusExp)}; }},
    {"dnwr-a-lt-b", [] { return std::vector{dnwr_model(-1.0, KappaSelector::One)}; }},
    {"dnwr-a-lt-b-kappa",
     [] { return std::vector{dnwr_model(-1.0, KappaSelector::OnePlusExp)}; }},
    {"dnwr-bounds-T2",
     [] {
         auto c = dnwr_error_equations(3.0, 2.0);
         return std::vector{c};
     }},
    {"dnwr-bounds-T50",
     [] {
         auto c = dnwr_error_equations(3.0, 50.0);
         c.dt = 0.1;
         c.bound = BoundMode::Linear;
         return std::vector{c};
     }},
    {"nnwr-theta",
     [] {
         return std::vector{nnwr_on_06(unequal_widths(4), {0.1, 0.2, 0.25, 0.3, 0.4})};
     }},
    {"nnwr-N",
     [] {
         std::vector<ExperimentConfig> out;
         for (int n = 2; n <= 6; ++n) {
             auto c = nnwr_on_06(std::vector<double>(static_cast<std::size_t>(n), 6.0 / n), {0.25});
             out.push_back(c);
         }
         return out;
     }},
    {"nnwr-unequal",
     [] {
         std::vector<ExperimentConfig> out;
         for (int n = 2; n <= 6; ++n)
             out.push_back(nnwr_on_06(unequal_widths(n), {0.25}));
         return out;
     }},
    {"swr-compare",
     [] {
         ExperimentConfig dnwr = dnwr_model(0.0, KappaSelector::One);
         dnwr.thetas = {0.5};
         ExperimentConfig nnwr = dnwr;
         nnwr.method = Method::Nnwr;
         nnwr.thetas = {0.25};
         ExperimentConfig swr = dnwr;
         swr.method = Method::Swr;
         swr.thetas = {1.0};
         swr.bound = BoundMode::None;
         swr.max_iters = 200;
         return std::vector{dnwr, nnwr, swr};
     }},
    {"nnwr2d",
     [] {
         ExperimentConfig c;
         c.method = Method::Nnwr2D;
         c.x_left = 0.0;
         c.x_right = 1.0;
         c.interfaces = {0.4, 0.75};
         c.dx = 0.01;
         c.dt = 0.004;
         c.t_final = 0.2;
         c.thetas = {0.1, 0.25, 0.4};
         c.n_y = 31;
         return std::vector{c};
     }},
};

}  // namespace

std::vector<std::string> figure_ids()
{
    std::vector<std::string> ids;
    for (const auto& f : kFigures)
        ids.emplace_back(f.id);
    return ids;
}

std::vector<ExperimentConfig> figure_configs(std::string_view figure_id)
{
    const auto it = std::find_if(std::begin(kFigures), std::end(kFigures),
                                 [&](const Figure& f) { return f.id == figure_id; });
    if (it == std::end(kFigures))
        fail(Errc::ConfigError, "unknown figure id '" + std::string(figure_id) + "'");
    return it->build();
}

}  // namespace wrlab
