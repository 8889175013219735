#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace symrep {

// Neumaier summation
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0;
    double carry_ = 0;
};

struct Summary {
    std::size_t count = 0;
    double mean = 0;
    // unbiased
    double variance = 0;
    double min = 0;
    double max = 0;
    double max_abs = 0;
};

Summary summarize(const std::vector<double>& xs);
double correlation(const std::vector<double>& a, const std::vector<double>& b);

double normal_cdf(double x, double sd = 1.0);
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);
double ks_two_sample(std::vector<double> a, std::vector<double> b);
// upper tail P(X >= stat) for chi-square with dof degrees of freedom
double chi_square_pvalue(double stat, int dof);

// Runs fn(0..count-1) on up to jobs threads; the first exception is rethrown.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

} // namespace symrep
