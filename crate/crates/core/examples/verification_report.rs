//! Run a reduced verification grid and print it as a table, then as CSV and
//! JSON.

use malmsten::identities::{run_grid, CheckSettings};
use malmsten::{ComplexValue, IdentityId, ParamGrid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = ParamGrid {
        a_values: vec![0.5, 2.5],
        s_values: vec![ComplexValue::new(0.5, 0.0), ComplexValue::new(0.3, 0.4)],
        fe_s_values: vec![ComplexValue::new(-1.5, 0.0), ComplexValue::new(2.0, 1.0)],
        n_values: vec![2],
    };
    let ids = [IdentityId::Formula30, IdentityId::EtaFe, IdentityId::Kummer];
    let report = run_grid(&grid, &ids, &CheckSettings::default())?;

    print!("{}", report.to_table(8));
    println!();
    print!("{}", report.to_csv());
    let json = report.to_json();
    println!("\n{} bytes of JSON; first row:", json.len());
    let value: serde_json::Value = serde_json::from_str(&json)?;
    println!("{}", serde_json::to_string_pretty(&value["rows"][0])?);
    Ok(())
}
