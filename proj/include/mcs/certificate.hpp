#ifndef MCS_CERTIFICATE_HPP
#define MCS_CERTIFICATE_HPP

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace mcs {

/**
 * Outcome of a verification suite: parameters, pass/fail, witness data
 * (matched counts, bijection tables, counterexamples) and wall-clock
 * duration. A failing certificate always carries a nonempty witness.
 */
struct VerificationCertificate {
    std::string suite;
    std::map<std::string, std::string> params;
    bool pass = true;
    std::vector<std::string> witness;
    long long duration_ms = 0;

    void fail(const std::string& why)
    {
        pass = false;
        witness.push_back(why);
    }

    void note(const std::string& line) { witness.push_back(line); }
};

class SuiteTimer {
public:
    explicit SuiteTimer(VerificationCertificate& cert)
        : cert_(cert), start_(std::chrono::steady_clock::now())
    {
    }
    ~SuiteTimer()
    {
        cert_.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start_)
                                .count();
    }

private:
    VerificationCertificate& cert_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace mcs

#endif
