use hurwitz_core::Mode;
use serde_json::Value;

fn keys(v: &Value) -> Vec<&str> {
    v.as_object().map(|o| o.keys().map(String::as_str).collect()).unwrap_or_default()
}

/// Checks one report against the published schema, including field order.
pub fn check_schema(report: &Value) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{what} in {report}"));
    if keys(report) != ["scenario", "ring", "checks", "timing_ms", "version"] {
        return fail("report fields");
    }
    if !(report["scenario"].is_string() || report["scenario"].is_null())
        || !report["ring"].is_string()
        || !report["timing_ms"].is_u64()
        || !report["version"].is_string()
    {
        return fail("report field types");
    }
    let Some(checks) = report["checks"].as_array() else { return fail("checks") };
    for check in checks {
        if keys(check) != ["property", "status", "bounds", "witness"] || !check["property"].is_string() {
            return fail("check fields");
        }
        let status = check["status"].as_str().unwrap_or("");
        if !["holds", "fails", "unknown"].contains(&status) {
            return fail("status");
        }
        let b = &check["bounds"];
        if keys(b) != ["degree", "trunc", "mode", "samples", "seed"]
            || !["degree", "trunc", "samples", "seed"].iter().all(|k| b[*k].is_u64())
            || b["mode"].as_str().and_then(Mode::parse).is_none()
        {
            return fail("bounds");
        }
        match &check["witness"] {
            Value::Null if status == "fails" => return fail("fails without witness"),
            Value::Null => {}
            w => {
                if keys(w) != ["f", "g", "i", "j", "value"]
                    || !w["i"].is_u64()
                    || !w["j"].is_u64()
                    || !["f", "g", "value"].iter().all(|k| w[*k].is_string())
                {
                    return fail("witness");
                }
            }
        }
    }
    Ok(())
}
