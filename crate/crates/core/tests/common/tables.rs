//! Published coefficient tables: `(a, C(Q, -1), Psi(T), sigma)` for `diag(I_n, -a)`, `k = 1`.

pub struct Table {
    pub name: &'static str,
    /// Form text with `{a}` standing for the last coefficient.
    pub pattern: &'static str,
    pub t_max: u64,
    pub rows: [(u64, &'static str, Option<f64>, Option<f64>); 15],
}

impl Table {
    pub fn form(&self, a: u64) -> String {
        self.pattern.replace("{a}", &a.to_string())
    }
}

pub const TABLES: [Table; 8] = [
    Table {
        name: "real-n2",
        pattern: "1,1;{a}@R",
        t_max: 1_000_000,
        rows: [
            (1, "2", Some(0.000492), Some(-0.51)),
            (2, "4 * sqrt(2)", Some(0.001647), Some(-0.56)),
            (3, "4 * sqrt(3)", Some(0.000691), Some(-0.65)),
            (4, "0", None, None),
            (5, "4/3 * sqrt(5)", Some(0.000427), Some(-0.68)),
            (6, "4 * sqrt(6)", Some(0.002946), Some(-0.60)),
            (7, "0", None, None),
            (8, "0", None, None),
            (9, "4", Some(0.001732), Some(-0.60)),
            (10, "4/3 * sqrt(10)", Some(0.001229), Some(-0.57)),
            (11, "12/5 * sqrt(11)", Some(0.002404), Some(-0.57)),
            (12, "0", None, None),
            (13, "4/7 * sqrt(13)", Some(0.001848), Some(-0.50)),
            (14, "8/3 * sqrt(14)", Some(0.003855), Some(-0.50)),
            (15, "0", None, None),
        ],
    },
    Table {
        name: "real-n4",
        pattern: "1,1,1,1;{a}@R",
        t_max: 1_000_000,
        rows: [
            (1, "5", Some(0.000004), Some(-0.93)),
            (2, "8 * sqrt(2)", Some(0.000015), Some(-0.97)),
            (3, "12 * sqrt(3)", Some(0.000032), Some(-0.98)),
            (4, "32", Some(0.000039), Some(-0.95)),
            (5, "140/13 * sqrt(5)", Some(0.000030), Some(-0.98)),
            (6, "72/5 * sqrt(6)", Some(0.000059), Some(-0.98)),
            (7, "112/5 * sqrt(7)", Some(0.000082), Some(-0.98)),
            (8, "32 * sqrt(2)", Some(0.000060), Some(-0.97)),
            (9, "36", Some(0.000008), Some(-0.97)),
            (10, "280/13 * sqrt(10)", Some(0.000072), Some(-0.98)),
            (11, "1540/61 * sqrt(11)", Some(0.000164), Some(-0.97)),
            (12, "192/5 * sqrt(3)", Some(0.000101), Some(-0.97)),
            (13, "364/17 * sqrt(13)", Some(0.000073), Some(-0.97)),
            (14, "112/5 * sqrt(14)", Some(0.000136), Some(-0.97)),
            (15, "360/13 * sqrt(15)", Some(0.000200), Some(-0.98)),
        ],
    },
    Table {
        name: "real-n6",
        pattern: "1,1,1,1,1,1;{a}@R",
        t_max: 1_000_000,
        rows: [
            (1, "27/4", Some(0.000016), Some(-0.992)),
            (2, "18 * sqrt(2)", Some(0.000048), Some(-0.998)),
            (3, "945/26 * sqrt(3)", Some(0.000135), Some(-0.998)),
            (4, "120", Some(0.000327), Some(-0.991)),
            (5, "1125/14 * sqrt(5)", Some(0.000400), Some(-0.998)),
            (6, "1242/13 * sqrt(6)", Some(0.000450), Some(-0.999)),
            (7, "7252/57 * sqrt(7)", Some(0.000832), Some(-0.998)),
            (8, "360 * sqrt(2)", Some(0.001283), Some(-0.999)),
            (9, "15309/26", Some(0.001346), Some(-0.996)),
            (10, "3950/21 * sqrt(10)", Some(0.001198), Some(-0.998)),
            (11, "9801/38 * sqrt(11)", Some(0.001887), Some(-0.997)),
            (12, "8640/13 * sqrt(3)", Some(0.002874), Some(-0.998)),
            (13, "689013/2198 * sqrt(13)", Some(0.002703), Some(-0.997)),
            (14, "6468/19 * sqrt(14)", Some(0.002454), Some(-0.998)),
            (15, "5550/13 * sqrt(15)", Some(0.003827), Some(-0.998)),
        ],
    },
    Table {
        name: "real-n8",
        pattern: "1,1,1,1,1,1,1,1;{a}@R",
        t_max: 1_000_000,
        rows: [
            (1, "685/136", Some(0.000018), Some(-0.9976)),
            (2, "440/17 * sqrt(2)", Some(0.000127), Some(-0.9999)),
            (3, "46575/697 * sqrt(3)", Some(0.000377), Some(-1.0000)),
            (4, "5120/17", Some(0.001031), Some(-0.9991)),
            (5, "84375/313 * sqrt(5)", Some(0.002218), Some(-1.0001)),
            (6, "281880/697 * sqrt(6)", Some(0.003478), Some(-1.0001)),
            (7, "11627700/20417 * sqrt(7)", Some(0.004801), Some(-1.0001)),
            (8, "28160/17 * sqrt(2)", Some(0.008191), Some(-1.0002)),
            (9, "2496825/697", Some(0.013384), Some(-0.9996)),
            (10, "7885000/5321 * sqrt(10)", Some(0.015999), Some(-1.0001)),
            (11, "214923225/124457 * sqrt(11)", Some(0.018761), Some(-0.9999)),
            (12, "3179520/697 * sqrt(3)", Some(0.027650), Some(-1.0001)),
            (13, "43006275/14281 * sqrt(13)", Some(0.039000), Some(-1.0001)),
            (14, "68682320/20417 * sqrt(14)", Some(0.044185), Some(-1.0002)),
            (15, "815568750/218161 * sqrt(15)", Some(0.047254), Some(-1.0001)),
        ],
    },
    Table {
        name: "cx-n2",
        pattern: "1,1;{a}@C:-3",
        t_max: 10_000,
        rows: [
            (1, "18", Some(0.000039), Some(-1.33)),
            (2, "48", Some(0.000061), Some(-1.34)),
            (3, "108", Some(0.000102), Some(-1.36)),
            (4, "48", Some(0.000147), Some(-1.37)),
            (5, "1200/7", Some(0.000050), Some(-1.35)),
            (6, "144", Some(0.000255), Some(-1.34)),
            (7, "2352/19", Some(0.000196), Some(-1.40)),
            (8, "192", Some(0.000243), Some(-1.35)),
            (9, "324", Some(0.000100), Some(-1.37)),
            (10, "800/7", Some(0.000296), Some(-1.35)),
            (11, "14520/37", Some(0.000686), Some(-1.36)),
            (12, "288", Some(0.000345), Some(-1.34)),
            (13, "14196/61", Some(0.000571), Some(-1.36)),
            (14, "6272/19", Some(0.000388), Some(-1.37)),
            (15, "3600/7", Some(0.000407), Some(-1.37)),
        ],
    },
    Table {
        name: "cx-n3",
        pattern: "1,1,1;{a}@C:-3",
        t_max: 10_000,
        rows: [
            (1, "30", Some(0.000085), Some(-1.35)),
            (2, "576/5", Some(0.000349), Some(-1.32)),
            (3, "324", Some(0.000884), Some(-1.35)),
            (4, "576", Some(0.001443), Some(-1.35)),
            (5, "7875/13", Some(0.002199), Some(-1.36)),
            (6, "7776/5", Some(0.003006), Some(-1.36)),
            (7, "58653/40", Some(0.004731), Some(-1.36)),
            (8, "9216/5", Some(0.005813), Some(-1.34)),
            (9, "2916", Some(0.007188), Some(-1.36)),
            (10, "47250/13", Some(0.008708), Some(-1.35)),
            (11, "886446/305", Some(0.010820), Some(-1.36)),
            (12, "31104/5", Some(0.011752), Some(-1.37)),
            (13, "1206153/238", Some(0.014859), Some(-1.35)),
            (14, "703836/125", Some(0.017702), Some(-1.34)),
            (15, "212625/26", Some(0.022768), Some(-1.36)),
        ],
    },
    Table {
        name: "cx-n4",
        pattern: "1,1,1,1;{a}@C:-3",
        t_max: 10_000,
        rows: [
            (1, "30", Some(0.000052), Some(-1.36)),
            (2, "1920/11", Some(0.000468), Some(-1.33)),
            (3, "648", Some(0.001536), Some(-1.35)),
            (4, "19200/11", Some(0.003596), Some(-1.35)),
            (5, "1560000/521", Some(0.006766), Some(-1.35)),
            (6, "51840/11", Some(0.012691), Some(-1.36)),
            (7, "28812000/2801", Some(0.018688), Some(-1.36)),
            (8, "122880/11", Some(0.029712), Some(-1.36)),
            (9, "17496", Some(0.039107), Some(-1.36)),
            (10, "156000000/5731", Some(0.057215), Some(-1.36)),
            (11, "428688480/13421", Some(0.076104), Some(-1.36)),
            (12, "414720/11", Some(0.100624), Some(-1.36)),
            (13, "2039255400/30941", Some(0.111032), Some(-1.37)),
            (14, "1843968000/30811", Some(0.158689), Some(-1.37)),
            (15, "42120000/521", Some(0.189703), Some(-1.36)),
        ],
    },
    Table {
        name: "cx-n5",
        pattern: "1,1,1,1,1;{a}@C:-3",
        t_max: 10_000,
        rows: [
            (1, "18", Some(0.000059), Some(-1.36)),
            (2, "4224/13", Some(0.000920), Some(-1.34)),
            (3, "17496/13", Some(0.004840), Some(-1.35)),
            (4, "33792/7", Some(0.014810), Some(-1.35)),
            (5, "4884375/403", Some(0.036694), Some(-1.36)),
            (6, "2052864/91", Some(0.075213), Some(-1.36)),
            (7, "141229221/3268", Some(0.142486), Some(-1.37)),
            (8, "1081344/13", Some(0.234356), Some(-1.36)),
            (9, "1417176/13", Some(0.387823), Some(-1.36)),
            (10, "286550000/1519", Some(0.577332), Some(-1.37)),
            (11, "12968792826/45695", Some(0.866876), Some(-1.37)),
            (12, "32845824/91", Some(1.201558), Some(-1.36)),
            (13, "34464530139/67039", Some(1.680102), Some(-1.37)),
            (14, "8285447632/10621", Some(2.199171), Some(-1.37)),
            (15, "2373806250/2821", Some(3.014865), Some(-1.36)),
        ],
    },
];
