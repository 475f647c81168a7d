import java.sql.*;

class StatementQueryGetter {
    void run(Connection c) throws SQLException {
        Statement st = c.createStatement();
        ResultSet rs = st.executeQuery("SELECT id, email FROM customer");
        while (rs.next()) {
            int mail = rs.getInt("email");
        }
    }
}
