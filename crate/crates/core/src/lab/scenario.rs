//! Worked examples as data: each scenario file lists expected facts with
//! their provenance, and the runner recomputes every fact from scratch.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Deserialize;

use crate::braid::{closure_profile, parse_band_word, rotation_braid, BandWord, HIRASAWA_STOIMENOW};
use crate::error::Error;
use crate::fdtc::{
    check_main_hypotheses, dehornoy_floor, fdtc_interval, integer, interval_propagate, Propagation,
    RationalInterval,
};
use crate::foliation::{
    ab_stabilization, coherence_run, defect_from_foliation, euler_and_sl, extended_graph,
    fdtc_upper_bound, from_bennequin_surface, key_lemma_check, sample_complex, validate_complex,
    CoherenceEvent, CoherenceState, FoliationComplex, RegionType, SampleProfile, StabilizationKind,
    Vertex,
};
use crate::garside::{
    cycle_normal_form, is_rigid, is_strongly_quasipositive_closure, left_normal_form,
};
use crate::par::{map_indices, Execution};
use crate::surface::{build_surface, defect_report, surface_stats};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Stated in the source text.
    Published,
    /// Computed by the oracle command recorded with the fact.
    Derived,
    /// Immediate from a definition.
    Trivial,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Published => "published",
            Source::Derived => "derived",
            Source::Trivial => "trivial",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fact {
    pub key: String,
    pub value: toml::Value,
    pub source: Source,
    /// CLI invocation reproducing a derived fact.
    pub command: Option<String>,
    /// The records field of `command` that carries the value.
    pub record: Option<String>,
    pub note: Option<String>,
}

impl Fact {
    pub fn expected(&self) -> String {
        match &self.value {
            toml::Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub summary: String,
    #[serde(default)]
    pub parameters: toml::Table,
    #[serde(rename = "fact", default)]
    pub facts: Vec<Fact>,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let s: Scenario = toml::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        for f in &s.facts {
            if f.source == Source::Derived && f.command.is_none() {
                return Err(Error::Malformed(format!(
                    "derived fact '{}' in scenario '{}' has no command",
                    f.key, s.name
                )));
            }
        }
        Ok(s)
    }

    fn int(&self, key: &str) -> Result<i64, Error> {
        self.parameters
            .get(key)
            .and_then(toml::Value::as_integer)
            .ok_or_else(|| Error::Malformed(format!("scenario '{}' needs integer parameter '{key}'", self.name)))
    }

    fn ints(&self, key: &str) -> Result<Vec<i64>, Error> {
        self.parameters
            .get(key)
            .and_then(toml::Value::as_array)
            .and_then(|a| a.iter().map(toml::Value::as_integer).collect::<Option<Vec<_>>>())
            .ok_or_else(|| Error::Malformed(format!("scenario '{}' needs integer list '{key}'", self.name)))
    }

    fn text(&self, key: &str) -> Result<&str, Error> {
        self.parameters
            .get(key)
            .and_then(toml::Value::as_str)
            .ok_or_else(|| Error::Malformed(format!("scenario '{}' needs string parameter '{key}'", self.name)))
    }
}

const FILES: [(&str, &str); 6] = [
    ("hs-example", include_str!("../../scenarios/hs-example.toml")),
    ("remark22", include_str!("../../scenarios/remark22.toml")),
    ("example54", include_str!("../../scenarios/example54.toml")),
    ("example53-disk", include_str!("../../scenarios/example53-disk.toml")),
    ("lemma52-sweep", include_str!("../../scenarios/lemma52-sweep.toml")),
    ("prop55-closure", include_str!("../../scenarios/prop55-closure.toml")),
];

const COMPLEX_FILES: [(&str, &str); 1] = [(
    "example53-disk.fol",
    include_str!("../../scenarios/example53-disk.fol"),
)];

pub fn scenario_names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

pub fn load_scenario(name: &str) -> Result<Scenario, Error> {
    let (_, text) = FILES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownScenario(name.to_string()))?;
    Scenario::parse(text)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub key: String,
    pub expected: String,
    pub actual: Option<String>,
    pub source: Source,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.actual.as_deref() == Some(self.expected.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioReport {
    pub name: String,
    pub checks: Vec<Check>,
    /// Everything the runner computed, expected or not.
    pub computed: BTreeMap<String, String>,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

type Facts = BTreeMap<String, String>;

fn put(out: &mut Facts, key: impl Into<String>, value: impl ToString) {
    out.insert(key.into(), value.to_string());
}

pub fn run_scenario(name: &str) -> Result<ScenarioReport, Error> {
    let s = load_scenario(name)?;
    let computed = compute(&s)?;
    let checks = s
        .facts
        .iter()
        .map(|f| Check {
            key: f.key.clone(),
            expected: f.expected(),
            actual: computed.get(&f.key).cloned(),
            source: f.source,
        })
        .collect();
    Ok(ScenarioReport {
        name: s.name.clone(),
        checks,
        computed,
    })
}

fn compute(s: &Scenario) -> Result<Facts, Error> {
    match s.name.as_str() {
        "hs-example" => hs_example(s),
        "remark22" => remark22(s),
        "example54" => example54(s),
        "example53-disk" => example53_disk(s),
        "lemma52-sweep" => lemma52_sweep(s),
        "prop55-closure" => prop55_closure(),
        other => Err(Error::UnknownScenario(other.to_string())),
    }
}

fn hs_example(s: &Scenario) -> Result<Facts, Error> {
    let n = s.int("strands")? as usize;
    let genus = s.int("genus")? as u64;
    let w = parse_band_word(s.text("word").unwrap_or(HIRASAWA_STOIMENOW), n)?;
    let mut out = Facts::new();
    let profile = closure_profile(&w);
    let stats = surface_stats(&build_surface(&w));
    let report = defect_report(&w, genus)?;
    put(&mut out, "letters", w.len());
    put(&mut out, "exp", w.exponent_sum());
    put(&mut out, "sl", w.self_linking());
    put(&mut out, "components", profile.component_count);
    put(&mut out, "knot", profile.is_knot());
    put(&mut out, "chi", stats.euler_char);
    put(&mut out, "surface_components", stats.components);
    if let Some(g) = stats.genus {
        put(&mut out, "surface_genus", g);
        put(&mut out, "surface_genus_exceeds_link_genus", g > genus as i64);
    }
    put(&mut out, "defect", report.defect);
    put(&mut out, "negative_bands", report.negative_bands);
    put(&mut out, "negative_bands_at_least_defect", report.negative_bands as i64 >= report.defect);
    put(&mut out, "minimal_genus_consistent", report.minimal_genus_consistent);
    if let Some(gap) = report.genus_gap() {
        put(&mut out, "genus_gap", gap);
    }
    let c = from_bennequin_surface(&build_surface(&w));
    let k = c.counts();
    put(&mut out, "e_pos", k.e_pos);
    put(&mut out, "e_neg", k.e_neg);
    put(&mut out, "h_pos", k.h_pos);
    put(&mut out, "h_neg", k.h_neg);
    put(&mut out, "foliation_defect_bound", defect_from_foliation(&c)?.value());
    Ok(out)
}

fn remark22(s: &Scenario) -> Result<Facts, Error> {
    let mut out = Facts::new();
    for n in s.ints("strands")? {
        for m in s.ints("powers")? {
            let p = format!("n{n}.m{m}.");
            let w = rotation_braid(n as usize)?.pow(m);
            let nf = left_normal_form(&w);
            put(&mut out, format!("{p}inf"), nf.inf());
            put(&mut out, format!("{p}length"), nf.canonical_length());
            let (cycled, _) = cycle_normal_form(&nf)?;
            let mut rotated = nf.factors()[1..].to_vec();
            rotated.push(nf.factors()[0].clone());
            put(&mut out, format!("{p}cycling_rotates"), cycled.factors() == rotated.as_slice());
            put(&mut out, format!("{p}rigid"), is_rigid(&w)?);
            let sqp = is_strongly_quasipositive_closure(&w);
            put(&mut out, format!("{p}summit_inf"), sqp.summit.summit_inf);
            put(&mut out, format!("{p}sqp"), sqp.strongly_quasipositive);
            put(&mut out, format!("{p}floor"), dehornoy_floor(&w)?);
            let iv = fdtc_interval(&w)?;
            put(&mut out, format!("{p}interval"), &iv);
            put(&mut out, format!("{p}interval_contains_m"), iv.contains(&integer(m)));
        }
    }
    Ok(out)
}

fn ceil_ratio(num: i64, den: i64) -> i64 {
    Integer::div_ceil(&num, &den)
}

/// `δ` negative letters alternating between the two crossing chords, then a
/// positive letter, so the strongly quasipositive insertion rule is used.
fn example54_y(delta: i64) -> BandWord {
    let mut t: Vec<(usize, usize, i64)> = (0..delta)
        .map(|k| if k % 2 == 0 { (2, 4, -1) } else { (1, 3, -1) })
        .collect();
    t.push((2, 4, 1));
    BandWord::from_triples(4, &t)
}

/// Lower bound on `c(w)` for `w = x y` from a lower bound on `c(x)`.
fn propagate_example54(cx: RationalInterval, delta: i64, n: i64) -> Result<(RationalInterval, RationalInterval), Error> {
    let negatives_only = interval_propagate(&Propagation::NegativeBandLower {
        negatives: delta as u64,
        strands: n as u64,
    })?;
    let cy = interval_propagate(&Propagation::SqpInsert(negatives_only))?;
    let cw = interval_propagate(&Propagation::Product(cx, cy.clone()))?;
    Ok((cy, cw))
}

fn example54(s: &Scenario) -> Result<Facts, Error> {
    let n = s.int("strands")?;
    let mut out = Facts::new();
    let x_block = BandWord::from_triples(4, &[(1, 3, 1), (2, 4, 1), (1, 3, 1), (2, 4, 1)]);
    for delta in s.ints("deltas")? {
        let p = format!("d{delta}.");
        let big_n = ceil_ratio(3 * delta + 9, 4);
        let x = x_block.pow(big_n + 1).concat(&BandWord::from_triples(4, &[(1, 3, 1)]))?;
        let y = example54_y(delta);
        let w = x.concat(&y)?;
        put(&mut out, format!("{p}N"), big_n);
        put(&mut out, format!("{p}y_negative_letters"), y.negative_count());
        let floor_x = dehornoy_floor(&x)?;
        put(&mut out, format!("{p}floor_x"), floor_x);
        put(&mut out, format!("{p}floor_x_at_least_N"), floor_x >= big_n);
        let (cy, cw) = propagate_example54(RationalInterval::at_least(integer(floor_x)), delta, n)?;
        put(&mut out, format!("{p}c_y"), &cy);
        put(&mut out, format!("{p}c_w"), &cw);
        let hyp = check_main_hypotheses(&cw, delta as u64);
        put(&mut out, format!("{p}main2"), hyp.main2);
        let (_, cw_published) = propagate_example54(RationalInterval::at_least(integer(big_n)), delta, n)?;
        put(&mut out, format!("{p}c_w_from_published_bound"), &cw_published);
        put(&mut out, format!("{p}main2_from_published_bound"), check_main_hypotheses(&cw_published, delta as u64).main2);
        let f = build_surface(&w);
        let stats = surface_stats(&f);
        put(&mut out, format!("{p}surface_components"), stats.components);
        put(&mut out, format!("{p}non_fibered_hint"), stats.non_fibered_hint);
        let c = from_bennequin_surface(&f);
        put(&mut out, format!("{p}defect_bound"), defect_from_foliation(&c)?.value());

        // The rotation-braid version: c(β^N) = N exactly.
        let threshold = BigRational::new(BigInt::from(delta), BigInt::from(2))
            + BigRational::new(BigInt::from(delta + 1), BigInt::from(n))
            + integer(2);
        let rot_n = threshold.ceil().to_integer();
        let rot_n = i64::try_from(rot_n).map_err(|_| Error::Malformed("power too large".into()))?;
        let (_, cw_rot) = propagate_example54(RationalInterval::point(integer(rot_n)), delta, n)?;
        put(&mut out, format!("{p}rotation.N"), rot_n);
        put(&mut out, format!("{p}rotation.c_w"), &cw_rot);
        put(&mut out, format!("{p}rotation.main2"), check_main_hypotheses(&cw_rot, delta as u64).main2);
        let w_rot = rotation_braid(n as usize)?.pow(rot_n).concat(&y)?;
        put(&mut out, format!("{p}rotation.floor_w"), dehornoy_floor(&w_rot)?);
    }
    Ok(out)
}

fn example53_disk(s: &Scenario) -> Result<Facts, Error> {
    let file = s.text("complex_file")?;
    let (_, text) = COMPLEX_FILES
        .iter()
        .find(|(n, _)| *n == file)
        .ok_or_else(|| Error::Malformed(format!("unknown complex file '{file}'")))?;
    let c: FoliationComplex = text.parse()?;
    let binding = s.text("binding")?;
    let mut out = Facts::new();
    put(&mut out, "valid", validate_complex(&c).is_empty());
    let (chi, sl) = euler_and_sl(&c)?;
    put(&mut out, "chi", chi);
    put(&mut out, "sl", sl);
    let k = c.counts();
    put(&mut out, "e_neg", k.e_neg);
    let ab = c.hyperbolics.values().filter(|h| h.kind == RegionType::Ab).count();
    put(&mut out, "ab_tiles", ab);
    put(&mut out, "bennequin", c.is_bennequin());
    put(&mut out, "defect_bound", defect_from_foliation(&c)?.value());
    let bound = fdtc_upper_bound(&c, binding)?;
    put(&mut out, "fdtc_upper_bound", &bound);
    put(&mut out, "published_fdtc_within_bound", integer(0) <= bound);
    let negative_tile = c
        .hyperbolics
        .iter()
        .find(|(_, h)| h.kind == RegionType::Ab && !h.sign.is_positive())
        .map(|(id, _)| *id)
        .ok_or_else(|| Error::Malformed("no negative ab-tile".into()))?;
    let st = ab_stabilization(&c, negative_tile)?;
    put(&mut out, "stabilized.positive", st.kind == StabilizationKind::Positive);
    put(&mut out, "stabilized.bennequin", st.complex.is_bennequin());
    let (chi2, sl2) = euler_and_sl(&st.complex)?;
    put(&mut out, "stabilized.chi", chi2);
    put(&mut out, "stabilized.sl", sl2);
    Ok(out)
}

fn lemma52_sweep(s: &Scenario) -> Result<Facts, Error> {
    let seed = s.int("seed")? as u64;
    let samples = s.int("samples")? as u64;
    let results = map_indices(Execution::Parallel, samples, |i| {
        let c = sample_complex(seed, i, SampleProfile::KeyLemma);
        let lemma = key_lemma_check(&c).map(|r| r.holds).unwrap_or(false);
        let graph_ok = extended_graph(&c)
            .map(|g| {
                let negative_edges = c
                    .regions
                    .iter()
                    .filter(|r| {
                        c.region_kind(r).is_some_and(|h| {
                            !h.sign.is_positive()
                                && matches!(h.kind, RegionType::Ab | RegionType::Bb | RegionType::Bc)
                        })
                    })
                    .count();
                g.edges.len() == negative_edges
                    && g.fake.iter().all(|&f| g.valence(Vertex::Fake(f)) == 1)
            })
            .unwrap_or(false);
        (lemma, graph_ok)
    });
    let mut out = Facts::new();
    put(&mut out, "samples", results.len());
    put(&mut out, "violations", results.iter().filter(|r| !r.0).count());
    put(&mut out, "graph_violations", results.iter().filter(|r| !r.1).count());
    Ok(out)
}

fn prop55_closure() -> Result<Facts, Error> {
    use CoherenceEvent::*;
    let mut out = Facts::new();
    for e in CoherenceEvent::ALL {
        let (dc, di) = e.delta();
        put(&mut out, format!("delta.{}", e.label()), format!("{dc:+},{di:+}"));
    }
    let empty = coherence_run(CoherenceState::default(), &[])?;
    put(&mut out, "empty.closure_holds", empty.closure_holds());
    let one = coherence_run(CoherenceState::default(), &[AcSplit])?;
    put(&mut out, "type1.incoherent_start", one.history[0].incoherent);
    put(&mut out, "type1.incoherent_end", one.final_state().incoherent);
    put(&mut out, "type1.closure_holds", one.closure_holds());
    let two = coherence_run(CoherenceState { coherent: 1, incoherent: 0 }, &[AcMerge])?;
    put(&mut out, "type2.coherent_closes", two.coherent_closes);
    let mixed = coherence_run(
        CoherenceState { coherent: 1, incoherent: 0 },
        &[CcSplitCoherent, CcMergeMixed],
    )?;
    let f = mixed.final_state();
    put(&mut out, "3b4b.final", format!("{},{}", f.coherent, f.incoherent));
    put(&mut out, "3b4b.incoherent_monotone", mixed.incoherent_monotone);
    Ok(out)
}
