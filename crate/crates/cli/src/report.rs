//! Output rendering: JSON for machines, CSV for spreadsheets, human text
//! with digit grouping for terminals.

use abelian_subsets::counting::{CountTable, Variant};
use abelian_subsets::group::{AbelianGroup, GroupElement};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

/// Insert a separator every three digits: 1234567 -> 1,234,567.
pub fn group_digits(digits: &str) -> String {
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    let offset = digits.len() % 3;
    for (idx, ch) in digits.chars().enumerate() {
        if idx > 0 && idx % 3 == offset % 3 {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

fn header(group: &AbelianGroup, variant: Variant) -> Vec<(&'static str, Value)> {
    vec![
        ("group", json!(group.to_string())),
        ("invariant_factors", json!(group.invariant_factors())),
        ("order", json!(group.order())),
        ("exponent", json!(group.exponent())),
        ("variant", json!(variant.as_str())),
    ]
}

fn to_object(fields: Vec<(&'static str, Value)>) -> Value {
    let mut map = Map::new();
    for (key, value) in fields {
        map.insert(key.to_string(), value);
    }
    Value::Object(map)
}

pub struct Query<'a> {
    pub group: &'a AbelianGroup,
    pub variant: Variant,
    pub i: u64,
    pub g: &'a GroupElement,
    pub e_g: u64,
    pub count: String,
}

pub fn render_query(q: &Query, format: Format) -> String {
    match format {
        Format::Json => {
            let mut fields = header(q.group, q.variant);
            fields.push(("i", json!(q.i)));
            fields.push(("g", json!(q.g.residues())));
            fields.push(("e_g", json!(q.e_g)));
            fields.push(("count", json!(q.count)));
            pretty(&to_object(fields))
        }
        Format::Csv => {
            let residues = csv_residues(q.g);
            format!(
                "group,order,exponent,variant,i,g,e_g,count\n{},{},{},{},{},{},{},{}\n",
                q.group,
                q.group.order(),
                q.group.exponent(),
                q.variant.as_str(),
                q.i,
                residues,
                q.e_g,
                q.count
            )
        }
        Format::Human => format!(
            "group: {} (order {}, exponent {})\nvariant: {}\ni = {}, g = {}, e(g) = {}\ncount = {}\n",
            q.group,
            q.group.order(),
            q.group.exponent(),
            q.variant.as_str(),
            q.i,
            q.g,
            q.e_g,
            group_digits(&q.count)
        ),
    }
}

fn csv_residues(g: &GroupElement) -> String {
    let list = g
        .residues()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    format!("\"{list}\"")
}

pub fn render_table(table: &CountTable, format: Format) -> String {
    match format {
        Format::Json => {
            let mut class_sizes = Map::new();
            for (d, size) in &table.class_sizes {
                class_sizes.insert(d.to_string(), json!(size.to_string()));
            }
            let mut rows = Map::new();
            for (i, row) in table.rows.iter().enumerate() {
                let mut cells = Map::new();
                for (d, count) in row {
                    cells.insert(d.to_string(), json!(count.to_string()));
                }
                rows.insert(i.to_string(), Value::Object(cells));
            }
            let mut fields = header(&table.group, table.variant);
            fields.push(("class_sizes", Value::Object(class_sizes)));
            fields.push(("rows", Value::Object(rows)));
            pretty(&to_object(fields))
        }
        Format::Csv => {
            let mut out = String::from("i,e_class,class_size,count\n");
            for (i, row) in table.rows.iter().enumerate() {
                for (d, count) in row {
                    out.push_str(&format!("{i},{d},{},{count}\n", table.class_sizes[d]));
                }
            }
            out
        }
        Format::Human => {
            let group = &table.group;
            let mut out = format!(
                "group: {} (order {}, exponent {})\nvariant: {}\ne-classes (divisor: size): {}\n",
                group,
                group.order(),
                group.exponent(),
                table.variant.as_str(),
                table
                    .class_sizes
                    .iter()
                    .map(|(d, s)| format!("{d}: {s}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            for (i, row) in table.rows.iter().enumerate() {
                let cells = row
                    .iter()
                    .map(|(d, count)| format!("{d} -> {}", group_digits(&count.to_string())))
                    .collect::<Vec<_>>()
                    .join(", ");
                out.push_str(&format!("i = {i}: {cells}\n"));
            }
            out
        }
    }
}

pub fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report is valid JSON");
    text.push('\n');
    text
}
