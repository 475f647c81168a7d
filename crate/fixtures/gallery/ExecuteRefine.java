import java.math.BigDecimal;
import java.sql.*;

class ExecuteRefine {
    BigDecimal firstTotal(Connection conn) throws SQLException {
        Statement stmt = conn.createStatement();
        stmt.execute("SELECT total FROM Invoice");
        ResultSet rs = stmt.getResultSet();
        rs.next();
        return rs.getBigDecimal("total");
    }
}
