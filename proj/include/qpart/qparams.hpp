#pragma once

namespace qpart {

struct SeriesControl {
    double tail_tol = 1e-16;
    int max_terms = 10000;

    // Defaults overridden by QPART_TAIL_TOL / QPART_MAX_TERMS when set.
    static SeriesControl from_environment();
    void validate() const;
};

class QParams {
public:
    QParams(double q, double xi, SeriesControl control = {});

    double q() const { return q_; }
    double xi() const { return xi_; }
    const SeriesControl& control() const { return control_; }
    double tail_tol() const { return control_.tail_tol; }
    int max_terms() const { return control_.max_terms; }

private:
    double q_;
    double xi_;
    SeriesControl control_;
};

}  // namespace qpart
